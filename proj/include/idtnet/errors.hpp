#pragma once

#include <stdexcept>

namespace idtnet {

/// A computation that is well-posed but failed numerically (no convergence,
/// no dissipation).
class NumericError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed or missing input data.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace idtnet
