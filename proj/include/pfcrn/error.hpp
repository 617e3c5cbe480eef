#pragma once

#include <stdexcept>
#include <string>

namespace pfcrn {

// Caller supplied something the operation cannot accept.
class InvalidArgument : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An internal consistency check failed. Seeing one of these means a bug or a
// broken theorem hypothesis, never bad user input.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// A symbolic computation would exceed its configured work limit.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace pfcrn
