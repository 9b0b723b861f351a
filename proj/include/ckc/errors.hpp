#pragma once

#include <stdexcept>
#include <string>

namespace ckc {

// Malformed input: bad metric, demands larger than their color class, bad
// rational literal, etc.
class InvalidInput : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A guarantee the algorithms rely on did not hold. Always a bug, never a
// property of the input.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Exhaustive enumeration would exceed the configured subset budget.
class EnumerationCapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define CKC_ENSURE(cond, msg)                                            \
  do {                                                                   \
    if (!(cond)) throw ::ckc::InvariantViolation(std::string(msg));      \
  } while (false)

}  // namespace ckc
