// errors.hpp — Exception types for the ptsim library

#pragma once

#include <stdexcept>
#include <string>

namespace ptsim {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Input matrix contains NaN or Inf entries.
struct NonFiniteError : Error {
    using Error::Error;
};

// Eigendecomposition path rejected: eigenvector condition number above bound.
struct NonDiagonalizableError : Error {
    using Error::Error;
};

// A gate handed to a circuit builder is not unitary within tolerance.
struct NonUnitaryGateError : Error {
    using Error::Error;
};

// Post-selection on an outcome whose probability is numerically zero.
struct ZeroProbabilityError : Error {
    using Error::Error;
};

// Closed-form evolution requested at (or too close to) the exceptional point.
struct ExceptionalPointError : Error {
    using Error::Error;
};

// A matrix claimed to be a density matrix violates its invariants.
struct InvalidDensityError : Error {
    using Error::Error;
};

} // namespace ptsim
