#pragma once

#include <stdexcept>
#include <string>

namespace umbral {

/// Base for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Division where the numerator vanishes to lower order than the divisor.
class DivisionOrderError : public Error {
 public:
  using Error::Error;
};

/// Divisor is zero up to its truncation cap.
class ZeroDivisorError : public Error {
 public:
  using Error::Error;
};

/// Composition with an inner series that has a nonzero constant term.
class NotDeltaError : public Error {
 public:
  using Error::Error;
};

/// A series does not retain enough coefficients for the requested degree.
class CapExhaustedError : public Error {
 public:
  using Error::Error;
};

/// Family parameters outside their domain (a_j = 0, lambda = 1, r = 0, ...).
class InvalidParamsError : public Error {
 public:
  using Error::Error;
};

/// Index outside the range where a formula is defined.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Malformed rational literal.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace umbral
