#pragma once

#include <stdexcept>
#include <string>

namespace vframe {

// Base of every error thrown by the library. The CLI maps subclasses to exit
// statuses: parse/capacity/dimension -> 2, everything else -> 1.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed text input. `line` is 1-based, 0 when not tied to a line.
class ParseError : public Error {
 public:
  explicit ParseError(const std::string& what, std::size_t line = 0, std::size_t column = 0)
      : Error(what), line_(line), column_(column) {}
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

class DimensionError : public Error {
 public:
  using Error::Error;
};

// Exhaustive enumeration would exceed the configured dimension cutoff.
class CapacityError : public Error {
 public:
  using Error::Error;
};

// Requested a q-series coefficient beyond the truncation order, or combined
// series of different orders.
class TruncationError : public Error {
 public:
  using Error::Error;
};

class ValidationError : public Error {
 public:
  using Error::Error;
};

// Decomposition data that contradicts the structure codes it is attached to.
class InconsistencyError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

// A theorem hypothesis required by an operation does not hold.
class HypothesisError : public Error {
 public:
  using Error::Error;
};

class TrivialityError : public HypothesisError {
 public:
  using HypothesisError::HypothesisError;
};

// Argument outside the domain of an otherwise valid operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

}  // namespace vframe
