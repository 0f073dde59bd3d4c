#pragma once

#include "postlie/core/scalar.hpp"

namespace postlie::core {

/// a + b t with t^2 = 0.
struct DualScalar {
  Scalar value;
  Scalar slope;

  DualScalar() = default;
  DualScalar(Scalar v) : value(std::move(v)) {}  // NOLINT(google-explicit-constructor)
  DualScalar(Scalar v, Scalar s) : value(std::move(v)), slope(std::move(s)) {}
  DualScalar(long v) : value(v) {}  // NOLINT(google-explicit-constructor)

  bool is_zero() const { return value.is_zero() && slope.is_zero(); }
  std::string str() const { return value.str() + " + " + slope.str() + "t"; }

  DualScalar operator-() const { return {-value, -slope}; }
  DualScalar& operator+=(const DualScalar& o) { value += o.value; slope += o.slope; return *this; }
  DualScalar& operator-=(const DualScalar& o) { value -= o.value; slope -= o.slope; return *this; }
  DualScalar& operator*=(const DualScalar& o) {
    slope = value * o.slope + slope * o.value;
    value *= o.value;
    return *this;
  }
  friend DualScalar operator+(DualScalar a, const DualScalar& b) { return a += b; }
  friend DualScalar operator-(DualScalar a, const DualScalar& b) { return a -= b; }
  friend DualScalar operator*(DualScalar a, const DualScalar& b) { return a *= b; }
  friend bool operator==(const DualScalar& a, const DualScalar& b) {
    return a.value == b.value && a.slope == b.slope;
  }
};

}  // namespace postlie::core
