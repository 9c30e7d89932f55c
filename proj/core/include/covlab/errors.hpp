#pragma once

#include <stdexcept>
#include <string>

namespace covlab {

// Base class for all errors raised by the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Violated invariant, precondition, or malformed input. CLI exit code 1.
struct ValidationError : Error {
  using Error::Error;
};

// Size guard exceeded (configurable limits). CLI exit code 2.
struct GuardError : Error {
  using Error::Error;
};

// Internal consistency check backed by a proof; failure means a bug.
#define COVLAB_CHECK(cond, msg)                                        \
  do {                                                                 \
    if (!(cond)) throw std::logic_error(std::string("internal: ") + (msg)); \
  } while (0)

}  // namespace covlab
