#pragma once

#include <stdexcept>
#include <string>

namespace phaselab {

// Bad user input: unknown family, invalid flag values, unreadable files.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A computation could not deliver a trustworthy number.
struct NumericalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Arguments outside the supported range of a numerical routine.
struct DomainError : NumericalError {
  using NumericalError::NumericalError;
};

struct OverflowError : NumericalError {
  using NumericalError::NumericalError;
};

struct DegenerateTurningPoint : NumericalError {
  using NumericalError::NumericalError;
};

struct TrappedTrajectory : NumericalError {
  using NumericalError::NumericalError;
};

struct StiffnessError : NumericalError {
  using NumericalError::NumericalError;
};

}  // namespace phaselab
