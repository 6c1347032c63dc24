#pragma once

#include <stdexcept>
#include <string>

namespace curvetwist {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed text input (polynomials, braid words, moves, JSON payloads).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// An argument violates an operation's precondition.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A rational map or pencil whose image determinant vanishes identically.
class DegenerateMapError : public Error {
 public:
  using Error::Error;
};

/// A basepoint of the rational map lies on the source curve.
class BasepointOnCurveError : public Error {
 public:
  using Error::Error;
};

/// Numerical failure in root finding or path tracking.
class NumericalError : public Error {
 public:
  using Error::Error;
};

}  // namespace curvetwist
