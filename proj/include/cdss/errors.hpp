#pragma once

#include <stdexcept>
#include <string>

namespace cdss {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Invalid or unsupported system parameters.
class ParameterError : public Error {
 public:
  using Error::Error;
};

// Parameters fall outside the regime a construction or formula covers.
class RegimeError : public ParameterError {
 public:
  using ParameterError::ParameterError;
};

// Reducible or otherwise unusable field polynomial.
class FieldError : public ParameterError {
 public:
  using ParameterError::ParameterError;
};

// Caller passed inputs of the wrong shape (lengths, ranges, duplicates).
class UsageError : public Error {
 public:
  using Error::Error;
};

class InsufficientDataError : public UsageError {
 public:
  using UsageError::UsageError;
};

// Arithmetic outside its domain, e.g. inverting zero.
class DomainError : public Error {
 public:
  using Error::Error;
};

// Redundant data that does not agree with itself.
class InconsistencyError : public Error {
 public:
  using Error::Error;
};

// Malformed serialized input.
class FormatError : public Error {
 public:
  using Error::Error;
};

}  // namespace cdss
