#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace stablekernel {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An exhaustive enumeration would exceed the configured limit.
class BudgetExceeded : public Error {
 public:
  BudgetExceeded(std::string what, std::size_t requested, std::size_t limit)
      : Error(what + ": " + std::to_string(requested) + " exceeds limit " +
              std::to_string(limit)),
        requested_(requested),
        limit_(limit) {}

  std::size_t requested() const noexcept { return requested_; }
  std::size_t limit() const noexcept { return limit_; }

 private:
  std::size_t requested_;
  std::size_t limit_;
};

/// The input does not have the syntactic shape an operation requires.
class ShapeError : public Error {
 public:
  using Error::Error;
};

class NotNested : public ShapeError {
 public:
  using ShapeError::ShapeError;
};

class NotFLP : public ShapeError {
 public:
  using ShapeError::ShapeError;
};

class NotWeightConstraintProgram : public ShapeError {
 public:
  using ShapeError::ShapeError;
};

class NotPDB : public ShapeError {
 public:
  using ShapeError::ShapeError;
};

class NotDisjunctiveRule : public ShapeError {
 public:
  using ShapeError::ShapeError;
};

class NotMonotone : public ShapeError {
 public:
  using ShapeError::ShapeError;
};

class NotAntimonotone : public ShapeError {
 public:
  using ShapeError::ShapeError;
};

/// Raised by operations defined only on aggregate-free formulas.
class AggregatePresent : public ShapeError {
 public:
  AggregatePresent() : ShapeError("formula contains an aggregate; compile it first") {}
};

/// A side condition on atom occurrences (completion, explicit definitions)
/// does not hold.
class PolarityViolation : public ShapeError {
 public:
  using ShapeError::ShapeError;
};

class InvalidInstance : public Error {
 public:
  using Error::Error;
};

}  // namespace stablekernel
