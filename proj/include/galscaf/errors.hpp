#pragma once

#include <stdexcept>
#include <string>

namespace galscaf {

// Raised when a truncation cap hides the data needed to finish a
// computation. Callers may retry with a larger cap.
struct InsufficientPrecision : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Raised when a fact imported from the literature (and assumed by a
// construction) fails at runtime. Never a user error.
struct ImportedFactViolation : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed or unsupported input (bad field parameters, p | e, ...).
struct InvalidInput : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

}  // namespace galscaf
