#pragma once

#include "nng/errors.hpp"
#include "nng/external_potential.hpp"
#include "nng/field.hpp"
#include "nng/grid.hpp"
#include "nng/meta_state.hpp"
#include "nng/units.hpp"
