#pragma once

#include <stdexcept>
#include <string>

namespace hibi {

/// Malformed or out-of-contract input (bad file, cycle, invalid tuple...).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An enumeration exceeded a configured cap.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A mathematical statement that is supposed to be a theorem failed.
/// Never expected; raised loudly so a scan cannot silently pass.
class MathAssertion : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Internal consistency failure (a bug, not bad input).
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace hibi
