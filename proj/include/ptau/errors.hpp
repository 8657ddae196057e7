#pragma once

#include <stdexcept>
#include <string>

namespace ptau {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Arithmetic between polynomials declared over different symbol sets.
class SymbolMismatch : public Error {
 public:
  using Error::Error;
};

/// A substitution made a denominator vanish identically.
class DegenerateSpecialization : public Error {
 public:
  using Error::Error;
};

/// Scaling data violating the trace condition or other parameter constraints.
class InvalidParameters : public Error {
 public:
  using Error::Error;
};

/// Evaluation at a point where a tau function (or a fixed singularity) vanishes.
class PoleError : public Error {
 public:
  using Error::Error;
};

/// Step-size underflow while integrating towards a movable pole.
class IntegrationPole : public PoleError {
 public:
  IntegrationPole(const std::string& what, double last_good_t) : PoleError(what), last_t(last_good_t) {}
  double last_t;
};

/// Okamoto extraction on a D4 branch where the extraction denominator is zero.
class DegenerateBranch : public Error {
 public:
  using Error::Error;
};

class ShapeError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace ptau
