#pragma once

#include <stdexcept>
#include <string>

namespace bautin {

// Base class for everything this library throws on purpose.
struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Configuration / input problems (CLI exit code 2).
struct ParseError : Error {
  using Error::Error;
};

// Numerical failures (CLI exit code 3).
struct NumericalError : Error {
  using Error::Error;
};

struct BoundaryRootError : NumericalError {
  using NumericalError::NumericalError;
};
struct NoLeadingPairError : NumericalError {
  using NumericalError::NumericalError;
};
struct H1FailedError : NumericalError {
  using NumericalError::NumericalError;
};
struct NotARootError : NumericalError {
  using NumericalError::NumericalError;
};
struct DegenerateError : NumericalError {
  using NumericalError::NumericalError;
};
struct NormalizationSingularError : NumericalError {
  using NumericalError::NumericalError;
};
struct MissingOrderError : NumericalError {
  using NumericalError::NumericalError;
};
struct UnresolvableError : NumericalError {
  using NumericalError::NumericalError;
};
struct DegenerateL2Error : NumericalError {
  using NumericalError::NumericalError;
};
struct UnsupportedSignError : NumericalError {
  using NumericalError::NumericalError;
};
struct NoCyclesError : NumericalError {
  using NumericalError::NumericalError;
};
struct NoConvergenceError : NumericalError {
  using NumericalError::NumericalError;
};
struct StencilFailureError : NumericalError {
  using NumericalError::NumericalError;
};
struct StepTooLargeError : NumericalError {
  using NumericalError::NumericalError;
};
struct NonFiniteError : NumericalError {
  using NumericalError::NumericalError;
};

}  // namespace bautin
