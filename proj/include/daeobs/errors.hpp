#pragma once

#include <stdexcept>
#include <string>

namespace daeobs {

/// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Malformed or inconsistent input (bad dimensions, unreadable files, invalid
/// configuration). CLI exit code 2.
struct InputError : Error {
  using Error::Error;
};

/// The requested design does not exist (functional not impulse observable or
/// not detectable). CLI exit code 3.
struct InfeasibleError : Error {
  using Error::Error;
};

/// A numerical procedure failed (decomposition did not converge, no
/// stabilizing Riccati solution, singular weighting). CLI exit code 4.
struct NumericalError : Error {
  using Error::Error;
};

}  // namespace daeobs
