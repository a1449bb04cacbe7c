#pragma once

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace kitebeam {

// Directions live on the oriented unit circle R/Z and are measured in
// turns (1 turn = a full revolution = 2*pi radians). With this unit the
// distance from a point to the nearest integer is the natural circle
// metric, which is what the number-theoretic layer runs on. Geometry
// converts to radians at its own boundary.

template <typename Scalar>
inline constexpr Scalar two_pi_v = Scalar(2) * std::numbers::pi_v<Scalar>;

// Reduction of a real to [0, 1).
template <typename Scalar>
Scalar wrap_unit(Scalar x) {
  Scalar r = x - std::floor(x);
  // floor rounding can land exactly on 1 for tiny negative inputs
  if (r >= Scalar(1)) r -= Scalar(1);
  if (r < Scalar(0)) r = Scalar(0);
  return r;
}

// <x>: distance from x to the nearest integer, in [0, 1/2].
template <typename Scalar>
Scalar nearest_integer_distance(Scalar x) {
  if (!std::isfinite(x)) {
    throw std::domain_error("nearest_integer_distance: non-finite input");
  }
  const Scalar r = wrap_unit(x);
  return std::min(r, Scalar(1) - r);
}

// Signed representative of x mod 1 in (-1/2, 1/2].
template <typename Scalar>
Scalar signed_unit(Scalar x) {
  const Scalar r = wrap_unit(x);
  return r > Scalar(0.5) ? r - Scalar(1) : r;
}

// A point of R/Z. Always stored reduced to [0, 1).
template <typename Scalar>
class BasicCircleAngle {
 public:
  BasicCircleAngle() = default;

  static BasicCircleAngle from_turns(Scalar t) {
    if (!std::isfinite(t)) throw std::domain_error("CircleAngle: non-finite turns");
    return BasicCircleAngle(wrap_unit(t));
  }

  static BasicCircleAngle from_radians(Scalar r) {
    return from_turns(r / two_pi_v<Scalar>);
  }

  Scalar turns() const { return value_; }
  Scalar radians() const { return value_ * two_pi_v<Scalar>; }

  friend BasicCircleAngle operator+(BasicCircleAngle a, BasicCircleAngle b) {
    return BasicCircleAngle(wrap_unit(a.value_ + b.value_));
  }
  friend BasicCircleAngle operator-(BasicCircleAngle a, BasicCircleAngle b) {
    return BasicCircleAngle(wrap_unit(a.value_ - b.value_));
  }
  BasicCircleAngle operator-() const { return BasicCircleAngle(wrap_unit(-value_)); }

  // n-fold multiple as a circle element.
  BasicCircleAngle times(long long n) const {
    return BasicCircleAngle(wrap_unit(static_cast<Scalar>(n) * value_));
  }

  friend bool operator==(BasicCircleAngle a, BasicCircleAngle b) {
    return a.value_ == b.value_;
  }

 private:
  explicit BasicCircleAngle(Scalar v) : value_(v) {}
  Scalar value_ = Scalar(0);
};

using CircleAngle = BasicCircleAngle<double>;

// Angular difference a - b as the signed representative in (-1/2, 1/2].
template <typename Scalar>
Scalar signed_difference(BasicCircleAngle<Scalar> a, BasicCircleAngle<Scalar> b) {
  return signed_unit(a.turns() - b.turns());
}

// Circle distance <a - b>, in [0, 1/2].
template <typename Scalar>
Scalar circle_distance(BasicCircleAngle<Scalar> a, BasicCircleAngle<Scalar> b) {
  return nearest_integer_distance(a.turns() - b.turns());
}

}  // namespace kitebeam
