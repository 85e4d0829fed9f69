#pragma once

#include <cassert>
#include <cmath>
#include <limits>

namespace dirwell {

/**
 * Value of a minimal-time evaluation: a nonnegative real or +infinity.
 *
 * Infinity here means "unreachable along the direction set" and is a first
 * class state, not a big number: addition absorbs, every finite value compares
 * below it, and callers must branch on is_finite() before pulling a double
 * out. Scalar multiplication by a positive factor keeps the state.
 */
class ExtReal {
 public:
  constexpr ExtReal() : v_(0.0) {}

  static constexpr ExtReal infinity() {
    return ExtReal(std::numeric_limits<double>::infinity());
  }
  static ExtReal finite(double v) {
    assert(std::isfinite(v) && v >= 0.0);
    return ExtReal(v);
  }

  bool is_finite() const { return std::isfinite(v_); }

  // Finite value; callers branch on is_finite() first.
  double value() const {
    assert(is_finite());
    return v_;
  }
  double value_or(double fallback) const { return is_finite() ? v_ : fallback; }

  // Raw IEEE view (+inf when infinite); handy for printing and comparisons
  // against already-extended arithmetic.
  double raw() const { return v_; }

  friend ExtReal operator+(ExtReal a, ExtReal b) { return ExtReal(a.v_ + b.v_); }
  friend ExtReal operator*(double s, ExtReal a) {
    assert(s >= 0.0);
    if (s == 0.0 && !a.is_finite()) return ExtReal(0.0);  // 0 * inf := 0 here
    return ExtReal(s * a.v_);
  }

  friend bool operator==(ExtReal a, ExtReal b) { return a.v_ == b.v_; }
  friend bool operator!=(ExtReal a, ExtReal b) { return a.v_ != b.v_; }
  friend bool operator<(ExtReal a, ExtReal b) { return a.v_ < b.v_; }
  friend bool operator<=(ExtReal a, ExtReal b) { return a.v_ <= b.v_; }
  friend bool operator>(ExtReal a, ExtReal b) { return a.v_ > b.v_; }
  friend bool operator>=(ExtReal a, ExtReal b) { return a.v_ >= b.v_; }

  friend bool operator<=(ExtReal a, double b) { return a.v_ <= b; }
  friend bool operator<=(double a, ExtReal b) { return a <= b.v_; }

 private:
  explicit constexpr ExtReal(double v) : v_(v) {}
  double v_;
};

}  // namespace dirwell
