#pragma once

#include <stdexcept>
#include <string>

namespace nng {

// Bad input: an argument, config key or precondition that the caller controls.
class ValidationError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// The computation itself went wrong (NaN, CFL, failed decomposition).
class NumericalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace nng
