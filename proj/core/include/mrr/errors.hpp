#pragma once

#include <stdexcept>
#include <string>

namespace mrr {

// Base of every error raised by the library. The CLI maps the subclasses
// onto exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed arguments: out-of-range indices, non-adjacent darts, maps that
/// are not closed on their support.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// Two permutations on different domain sizes were combined.
class DomainMismatch : public Error {
 public:
  using Error::Error;
};

/// A multiplication table, group file or map file failed validation.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// Unknown builtin family or parameter out of range.
class SpecError : public Error {
 public:
  using Error::Error;
};

/// An exhaustive computation would exceed the configured map budget.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace mrr
