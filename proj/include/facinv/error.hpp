#pragma once

#include <stdexcept>
#include <string>

namespace facinv {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: empty generator lists, dimension mismatches, zero atoms.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class NotInSemigroup : public Error {
 public:
  using Error::Error;
};

class RequiresFullSemigroup : public Error {
 public:
  using Error::Error;
};

class UnsupportedDimension : public Error {
 public:
  using Error::Error;
};

/// Raised when a Budget runs out of steps.
class ResourceLimitExceeded : public Error {
 public:
  using Error::Error;
};

/// Raised when an intermediate value does not fit in 64 bits.
class OverflowError : public Error {
 public:
  using Error::Error;
};

}  // namespace facinv
