#pragma once

#include <stdexcept>
#include <string>

namespace xychain {

// Base class; everything the library throws derives from it.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Invalid configuration or parameters (CLI exit code 1).
class ConfigError : public Error {
 public:
  using Error::Error;
};

// Caller violated an operation's precondition (CLI exit code 1).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// Numerical inconsistency detected downstream of a valid input (CLI exit code 2).
class NumericalError : public Error {
 public:
  using Error::Error;
};

// Input outside the mathematical domain of an operation (CLI exit code 2).
class DomainError : public Error {
 public:
  using Error::Error;
};

// Time integration could not meet its tolerance (CLI exit code 2).
class IntegrationError : public Error {
 public:
  IntegrationError(const std::string& what, double time)
      : Error(what + " (t = " + std::to_string(time) + ")"), time_(time) {}

  double time() const noexcept { return time_; }

 private:
  double time_;
};

}  // namespace xychain
