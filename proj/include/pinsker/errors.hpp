#pragma once

#include <stdexcept>
#include <string>

namespace pinsker {

/// Base class for all errors raised by this library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Two distributions with different alphabet sizes were combined.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// A scalar argument was outside its admissible range.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Constraint values admit no concave risk curve.
class InfeasibleError : public Error {
 public:
  using Error::Error;
};

/// Unknown divergence name.
class LookupError : public Error {
 public:
  using Error::Error;
};

/// A closed form was requested for an entry that violates its hypothesis.
class HypothesisError : public Error {
 public:
  using Error::Error;
};

/// The weight density was evaluated at the location of a point atom.
class AtomError : public Error {
 public:
  using Error::Error;
};

/// A slope vector outside the feasible box was supplied.
class ConstraintError : public Error {
 public:
  using Error::Error;
};

/// A risk profile cannot be realized by a pair of distributions.
class NotRealizableError : public Error {
 public:
  using Error::Error;
};

}  // namespace pinsker
