#pragma once

#include <stdexcept>
#include <string>

namespace cycbar {

// Base of every error raised by the library. The CLI maps subclasses to
// exit codes (see tools/cycbar.cpp).
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Composing morphisms whose middle objects disagree.
class CompositionError : public Error {
 public:
  using Error::Error;
};

// An object or morphism does not belong to the category it was tagged with.
class CategoryError : public Error {
 public:
  using Error::Error;
};

// Input data violates an algebraic axiom or a structural invariant.
class ValidationError : public Error {
 public:
  using Error::Error;
};

// An index or size argument is outside the documented range.
class RangeError : public Error {
 public:
  using Error::Error;
};

// A computation could not be completed (e.g. a quotient that is not free).
class ComputationError : public Error {
 public:
  using Error::Error;
};

}  // namespace cycbar
