#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lxmod {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class FieldMismatch : public Error {
 public:
  using Error::Error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero") {}
};

/// Dimension or matrix shape does not fit the operation.
class ShapeMismatch : public Error {
 public:
  using Error::Error;
};

/// Raised when a value violates a structural precondition (e.g. a claimed
/// ideal that is not closed under the bracket, a non-abelian kernel).
class InvalidStructure : public Error {
 public:
  using Error::Error;
};

/// The span handed to inclusion_crossed_module is not closed under brackets
/// with the ambient algebra: [e_actor, v_ideal] left the span (0-based).
class NotAnIdeal : public InvalidStructure {
 public:
  NotAnIdeal(std::size_t actor_index, std::size_t ideal_index, const std::string& detail)
      : InvalidStructure("not an ideal: [e" + std::to_string(actor_index + 1) + ", v" + std::to_string(ideal_index + 1) +
                         "] = " + detail + " is outside the span"),
        actor_index_(actor_index),
        ideal_index_(ideal_index) {}

  std::size_t actor_index() const noexcept { return actor_index_; }
  std::size_t ideal_index() const noexcept { return ideal_index_; }

 private:
  std::size_t actor_index_;
  std::size_t ideal_index_;
};

/// The operation needs a finite field and was given the rationals.
class UnsupportedField : public Error {
 public:
  using Error::Error;
};

/// Candidate space larger than the configured budget.
class BudgetExceeded : public Error {
 public:
  BudgetExceeded(std::string space_size, unsigned long long budget)
      : Error("candidate space " + space_size + " exceeds budget " + std::to_string(budget)),
        space_size_(std::move(space_size)),
        budget_(budget) {}

  const std::string& space_size() const noexcept { return space_size_; }
  unsigned long long budget() const noexcept { return budget_; }

 private:
  std::string space_size_;
  unsigned long long budget_;
};

/// Morphisms or homotopies whose endpoints do not chain.
class EndpointMismatch : public Error {
 public:
  using Error::Error;
};

}  // namespace lxmod
