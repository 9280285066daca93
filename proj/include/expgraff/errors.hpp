#pragma once

#include <stdexcept>

namespace expgraff {

// Caller-supplied data violates a precondition (bad dimensions, dependent
// frame, malformed document, ...).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An internal consistency check failed; only reachable when the tolerance
// regime is inconsistent with the data (e.g. a pivot search that minimality
// guarantees must succeed).
class DegeneracyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A solve hit a near-singular matrix.
class ConditioningError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace expgraff
