#pragma once

#include <stdexcept>
#include <string>

namespace gmalie {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands live over different fields (e.g. GF(5) and GF(7)).
class FieldMismatchError : public Error {
 public:
  using Error::Error;
};

/// Shapes or ambient dimensions do not line up.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// Malformed scalar or descriptor text.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// A computation would exceed the configured resource budget.
class BudgetExceededError : public Error {
 public:
  using Error::Error;
};

/// An operation refused its input because a checked precondition failed.
/// `witness()` names the concrete counterexample.
class PreconditionError : public Error {
 public:
  PreconditionError(const std::string& what, std::string witness)
      : Error(what + ": " + witness), witness_(std::move(witness)) {}
  const std::string& witness() const noexcept { return witness_; }

 private:
  std::string witness_;
};

}  // namespace gmalie
