#pragma once

#include <stdexcept>
#include <string>

namespace tsrelay {

/// Base of every error thrown by the library. `kind()` is a stable token
/// suitable for machine-readable reporting.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
  virtual const char* kind() const noexcept = 0;
};

/// A value violates a documented invariant (negative power, rho outside [0,1], ...).
class ParameterError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "parameter_error"; }
};

/// Configuration is valid but leaves no time for information transfer (rho == 1).
class DegenerateConfigError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "degenerate_config"; }
};

/// Argument outside the mathematical domain of a special function or density.
class DomainError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "domain_error"; }
};

/// A closed-form evaluation left [0,1] by more than rounding can explain.
class ConsistencyError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "internal_consistency"; }
};

/// Scenario file could not be read, parsed or written.
class IoError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "io_error"; }
};

}  // namespace tsrelay
