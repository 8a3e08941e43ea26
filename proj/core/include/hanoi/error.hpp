#pragma once

#include <stdexcept>
#include <string>

namespace hanoi {

// Base for every error the library raises on contract violations.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad argument: out-of-range peg, disk or digit, malformed text.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// Instance exceeds a size cap (packed-code width, exhaustive scan,
// explicit materialization, search memory budget).
class InfeasibleInstance : public Error {
 public:
  using Error::Error;
};

class IllegalMove : public Error {
 public:
  using Error::Error;
};

// Serialized data that fails header or invariant validation.
class FormatError : public Error {
 public:
  using Error::Error;
};

// Internal consistency failure found while verifying a structural claim.
class VerificationFailure : public Error {
 public:
  using Error::Error;
};

}  // namespace hanoi
