#pragma once

#include <stdexcept>
#include <string>

namespace hcyl {

/// Base class of every error raised by the solver library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A parameter lies outside the physically meaningful range.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Malformed or inconsistent run configuration.
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// Singular matrices, overflow, non-convergent quadrature, exhausted series order.
class NumericError : public Error {
 public:
  using Error::Error;
};

/// The optional oracle pass found the series solution out of tolerance.
class VerificationError : public Error {
 public:
  using Error::Error;
};

}  // namespace hcyl
