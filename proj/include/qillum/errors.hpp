// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace qillum {

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Shape or basis mismatch between operators.
class StructuralError : public Error {
 public:
  using Error::Error;
};

/// Parameter outside the valid domain (db >= 0.5, s outside [0,1], ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Requested construction exceeds the configured dimension cap.
class CapacityError : public Error {
 public:
  using Error::Error;
};

/// Numerical failure: eigensolver non-convergence or invariant violation.
class NumericalError : public Error {
 public:
  using Error::Error;
};

/// Malformed config file or unusable flag combination; maps to CLI exit
/// code 2 rather than 3.
class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace qillum
