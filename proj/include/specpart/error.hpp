#pragma once

#include <stdexcept>
#include <string>

namespace specpart {

// Base class for every error raised by the library. The CLI maps all of
// these to exit status 1.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// The median-shifted sign pattern cannot be completed to a bisection.
class CannotBalance : public Error {
 public:
  using Error::Error;
};

class NoConvergence : public Error {
 public:
  using Error::Error;
};

// A base graph violates the algebraic-connectivity budget of the family.
class HypothesisViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace specpart
