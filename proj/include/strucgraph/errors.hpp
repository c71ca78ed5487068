#pragma once

#include <stdexcept>
#include <string>

namespace strucgraph {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed graph text, out-of-range vertices, bad arguments.
class InputError : public Error {
 public:
  using Error::Error;
};

// The input is well formed but outside the class an operation requires
// (e.g. not connected, or contains a forbidden pattern).
class PreconditionError : public Error {
 public:
  explicit PreconditionError(const std::string& what,
                             std::string witness_pattern = {})
      : Error(what), witness_pattern_(std::move(witness_pattern)) {}

  const std::string& witness_pattern() const noexcept { return witness_pattern_; }

 private:
  std::string witness_pattern_;
};

// A structure theorem was expected to apply and did not. Never swallowed.
class TheoremViolation : public Error {
 public:
  using Error::Error;
};

// Exhaustive search refused because the instance is above its size cap.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace strucgraph
