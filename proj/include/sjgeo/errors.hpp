#pragma once

#include <stdexcept>
#include <string>

namespace sjgeo {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ShapeMismatch : public Error {
 public:
  using Error::Error;
};

/// A pivot fell below the relative threshold; the input is outside its
/// domain or numerically degenerate.
class SingularMatrix : public Error {
 public:
  using Error::Error;
};

/// The point is too close to the domain boundary for the requested
/// finite-difference stencil.
class DomainMargin : public Error {
 public:
  using Error::Error;
};

/// A point, tangent or group element violates one of its invariants. The
/// message names the invariant.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// A computed quantity violated a numerical contract (imaginary part of a
/// real form, symmetry of an action result).
class NumericalDefect : public Error {
 public:
  using Error::Error;
};

class UnknownCheck : public Error {
 public:
  using Error::Error;
};

}  // namespace sjgeo
