#pragma once

#include <stdexcept>
#include <string>

namespace qmt {

// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input or a violated precondition (CLI exit code 1).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// Sample space too large for the requested enumeration (CLI exit code 2).
class CapExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace qmt
