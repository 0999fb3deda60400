// errors.hpp — Exception types shared by all ftls modules

#pragma once

#include <stdexcept>
#include <string>

namespace ftls {

// Invalid physical or numerical input (negative rate, Ω_R > Ω, bad config value).
class InvalidArgument : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Arithmetic between operators tagged with different bases.
class BasisMismatch : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// The requested object does not exist for these parameters: degenerate H̄,
// colliding Floquet frequencies, non-unique stationary state.
class DegeneracyError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A numerical procedure could not reach its stated accuracy (e.g. a
// correlation function that has not decayed within the horizon).
class NumericalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace ftls
