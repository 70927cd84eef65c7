#pragma once

#include <cmath>
#include <limits>

#include "pinsker/errors.hpp"

namespace pinsker {

/// A nonnegative real value that may be +infinity; never NaN, never negative.
/// Divergences are measured in nats.
class ExtendedReal {
 public:
  ExtendedReal() : value_(0.0) {}

  explicit ExtendedReal(double value) : value_(value) {
    if (std::isnan(value_)) {
      throw DomainError("extended real cannot be NaN");
    }
    if (value_ < 0.0) {
      throw DomainError("extended real cannot be negative");
    }
  }

  static ExtendedReal infinity() {
    return ExtendedReal(std::numeric_limits<double>::infinity());
  }

  /// Clamps small negative rounding noise to zero; anything more negative throws.
  static ExtendedReal from_rounded(double value, double slack = 1e-9) {
    if (value < 0.0 && value >= -slack) value = 0.0;
    return ExtendedReal(value);
  }

  bool is_finite() const { return std::isfinite(value_); }
  bool is_infinite() const { return std::isinf(value_); }

  /// Underlying value; +infinity when not finite.
  double value() const { return value_; }

  friend bool operator<(ExtendedReal a, ExtendedReal b) { return a.value_ < b.value_; }
  friend bool operator>(ExtendedReal a, ExtendedReal b) { return a.value_ > b.value_; }
  friend bool operator<=(ExtendedReal a, ExtendedReal b) { return a.value_ <= b.value_; }
  friend bool operator>=(ExtendedReal a, ExtendedReal b) { return a.value_ >= b.value_; }
  friend bool operator==(ExtendedReal a, ExtendedReal b) { return a.value_ == b.value_; }

 private:
  double value_;
};

}  // namespace pinsker
