#pragma once

#include <stdexcept>
#include <string>

namespace pxpy {

/// Thrown when a precondition on an argument is violated (composite p, n = 0, k = 0, ...).
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A computation would exceed a configured resource cap (e.g. decimal digits).
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Two independent routes disagreed. Always a bug, never a property of the input.
class InconsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace pxpy
