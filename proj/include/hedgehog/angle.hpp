#pragma once

#include <cmath>
#include <numbers>

namespace hedgehog {

// Angle in radians, normalized to (-pi, pi].
class Angle {
 public:
  Angle() = default;
  explicit Angle(double radians) : value_(normalize(radians)) {}

  double radians() const { return value_; }
  double cos() const { return std::cos(value_); }
  double sin() const { return std::sin(value_); }
  double tan() const { return std::tan(value_); }

  Angle operator-() const { return Angle(-value_); }

  // True when cos(angle) is numerically indistinguishable from zero, i.e.
  // the angle counts as +-pi/2 for operations that must divide by cos.
  bool is_right_angle() const { return std::abs(cos()) < 1e-12; }

  static double normalize(double radians) {
    double r = std::remainder(radians, 2.0 * std::numbers::pi);
    if (r <= -std::numbers::pi) r += 2.0 * std::numbers::pi;
    return r;
  }

 private:
  double value_ = 0.0;
};

}  // namespace hedgehog
