#pragma once

#include <stdexcept>
#include <string>

namespace strandtrace {

/// Malformed or out-of-domain input (bad partition, shape outside stair(n), ...).
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An enumeration would exceed its configured size bound.
class GuardExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Arithmetic between symmetric functions stored in different bases.
class BasisMismatch : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// The trace calculus does not apply: iterating would leave the staircase-like class.
class NonTraceable : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace strandtrace
