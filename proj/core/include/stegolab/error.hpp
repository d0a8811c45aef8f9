#pragma once

#include <stdexcept>
#include <string>

namespace stegolab {

/// Base type for all errors raised by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// File could not be opened, read, or written.
class IoError : public Error {
 public:
  using Error::Error;
};

/// File is a format this library does not handle (e.g. JPEG).
class UnsupportedFormatError : public Error {
 public:
  using Error::Error;
};

/// File claims a supported format but its contents are malformed.
class DecodeError : public Error {
 public:
  using Error::Error;
};

/// Caller violated an operation's precondition.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

}  // namespace stegolab
