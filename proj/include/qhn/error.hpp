#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace qhn {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition on the inputs was violated (shape mismatch, zero
/// representation, out-of-range parameter, malformed problem file).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Exhaustive enumeration would exceed the configured candidate budget.
class BudgetExceeded : public Error {
 public:
  BudgetExceeded(std::uint64_t candidates, std::uint64_t budget)
      : Error("enumeration budget exceeded: " + std::to_string(candidates) +
              " candidate tuples > budget " + std::to_string(budget)),
        candidates_(candidates),
        budget_(budget) {}

  std::uint64_t candidates() const noexcept { return candidates_; }
  std::uint64_t budget() const noexcept { return budget_; }

 private:
  std::uint64_t candidates_;
  std::uint64_t budget_;
};

/// A uniqueness statement that the theory guarantees failed on a concrete
/// instance: two distinct maximal destabilizing subrepresentations, two
/// distinct strict Kempf maximizers, or an HN/Kempf mismatch.
class TheoremContradiction : public Error {
 public:
  using Error::Error;
};

}  // namespace qhn
