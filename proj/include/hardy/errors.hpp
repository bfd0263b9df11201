#pragma once

#include <stdexcept>
#include <string>

namespace hardy {

/// Base class for all errors thrown by this library.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Invalid input from the caller: unknown catalog names, bad parameters,
/// violated preconditions. Maps to CLI exit code 2.
class UsageError : public Error {
  public:
    using Error::Error;
};

/// Numerical failure: ill-conditioning, stalled damping, divergence,
/// vanished denominators. Maps to CLI exit code 3.
class NumericError : public Error {
  public:
    using Error::Error;
};

} // namespace hardy
