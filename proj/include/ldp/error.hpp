#pragma once

#include <stdexcept>
#include <string>

namespace ldp {

// Raised for invalid input: malformed data, violated preconditions,
// non-klt pairs.  The CLI maps it to exit code 2.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised when an internal consistency assumption fails.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace ldp
