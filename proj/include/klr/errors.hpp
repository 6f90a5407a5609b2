#pragma once

#include <stdexcept>
#include <string>

namespace klr {

// Malformed arguments: bad multipartition strings, out-of-range nodes,
// level mismatches between a shape and its multicharge.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A computation contradicted one of its own invariants (inexact q-factorial
// division, negative canonical-basis coefficient, inconsistent triangular
// system). Always a bug, never a user error.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// The available evidence does not pin a unique answer.
class Undetermined : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace klr
