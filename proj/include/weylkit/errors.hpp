#pragma once

#include <stdexcept>
#include <string>

namespace weylkit {

// Bad input: malformed weights, ranks below the family minimum, non-prime p.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A computed quantity broke an identity that must hold exactly.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

[[noreturn]] inline void fail_invariant(const std::string& what) {
  throw InvariantViolation(what);
}

}  // namespace weylkit
