#pragma once

#include <stdexcept>
#include <string>

namespace qplane {

// Malformed or out-of-contract input (bad literal, parameter outside a row's
// constraints, point off the curve). The CLI maps this to exit code 1.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An internal consistency check failed. The CLI maps this to exit code 2.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// A field extension would exceed the configured degree cap.
class DegreeCapExceeded : public InputError {
 public:
  using InputError::InputError;
};

}  // namespace qplane
