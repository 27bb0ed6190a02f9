#pragma once

#include <stdexcept>
#include <string>

namespace gravcat {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A scalar parameter is outside its admissible range (T <= 0, alpha <= 1, ...).
class ParameterError : public Error {
public:
  using Error::Error;
};

/// Malformed scenario configuration: unknown key, bad grid, unknown preset.
class ConfigError : public Error {
public:
  using Error::Error;
};

/// Base for failures that happen while computing.
class NumericError : public Error {
public:
  using Error::Error;
};

/// A matrix argument does not satisfy a structural requirement
/// (not Hermitian, not X-shaped, not a valid density matrix).
class StateError : public NumericError {
public:
  using NumericError::NumericError;
};

class OverflowError : public NumericError {
public:
  using NumericError::NumericError;
};

class ConvergenceError : public NumericError {
public:
  using NumericError::NumericError;
};

/// A non-unitary map sent the state to (numerically) zero trace.
class StateAnnihilatedError : public NumericError {
public:
  using NumericError::NumericError;
};

class IoError : public Error {
public:
  using Error::Error;
};

} // namespace gravcat
