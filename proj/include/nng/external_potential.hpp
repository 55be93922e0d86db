#pragma once

#include <vector>

#include "nng/grid.hpp"

namespace nng {

/// Single-copy external potential, applied identically to x and x~.
struct ExternalPotential {
    enum class Kind { none, uniform_field, harmonic, tabulated };

    Kind kind = Kind::none;
    double slope = 0.0;            // uniform field: V = slope * x
    double omega = 0.0;            // harmonic: V = m omega^2 x^2 / 2
    std::vector<double> samples;   // tabulated on the evolution grid

    static ExternalPotential none() { return {}; }
    static ExternalPotential uniform_field(double slope);
    static ExternalPotential harmonic(double omega);
    static ExternalPotential tabulated(std::vector<double> samples);

    // Values on `grid` for a particle of the given mass.
    std::vector<double> on_grid(const Grid1D& grid, double mass) const;
};

} // namespace nng
