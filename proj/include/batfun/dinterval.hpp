#pragma once

#include <algorithm>
#include <cmath>
#include <limits>

#include "batfun/rational.hpp"

namespace batfun {

/// Double-precision interval with outward rounding.  Every arithmetic op
/// computes in round-to-nearest and then widens by one ulp on each side,
/// which encloses the true result since IEEE operations are correctly
/// rounded.  Used for the high-volume grid sweeps in the bound catalog;
/// borderline comparisons fall back to exact/MPFR arithmetic.
struct DInterval {
  double lo, hi;

  DInterval() : lo(0), hi(0) {}
  explicit DInterval(double v) : lo(v), hi(v) {}
  DInterval(double l, double h) : lo(l), hi(h) {}

  static double down(double v) { return std::nextafter(v, -std::numeric_limits<double>::infinity()); }
  static double up(double v) { return std::nextafter(v, std::numeric_limits<double>::infinity()); }

  static DInterval from_rational(const Rational& q) {
    double m = q.get_d();  // truncated toward zero, within 1 ulp
    return {down(m), up(m)};
  }

  DInterval operator+(const DInterval& o) const { return {down(lo + o.lo), up(hi + o.hi)}; }
  DInterval operator-(const DInterval& o) const { return {down(lo - o.hi), up(hi - o.lo)}; }
  DInterval operator-() const { return {-hi, -lo}; }

  DInterval operator*(const DInterval& o) const {
    double a = lo * o.lo, b = lo * o.hi, c = hi * o.lo, d = hi * o.hi;
    return {down(std::min(std::min(a, b), std::min(c, d))),
            up(std::max(std::max(a, b), std::max(c, d)))};
  }

  DInterval operator/(const DInterval& o) const {
    // Caller must ensure o excludes zero.
    double a = lo / o.lo, b = lo / o.hi, c = hi / o.lo, d = hi / o.hi;
    return {down(std::min(std::min(a, b), std::min(c, d))),
            up(std::max(std::max(a, b), std::max(c, d)))};
  }

  DInterval sqrt() const { return {down(std::sqrt(std::max(lo, 0.0))), up(std::sqrt(hi))}; }

  DInterval abs() const {
    if (lo >= 0) return *this;
    if (hi <= 0) return -*this;
    return {0.0, std::max(-lo, hi)};
  }

  DInterval square() const {
    DInterval a = abs();
    return {down(a.lo * a.lo), up(a.hi * a.hi)};
  }

  bool strictly_below(const DInterval& o) const { return hi < o.lo; }
  bool contains_zero() const { return lo <= 0 && hi >= 0; }
  double mid() const { return 0.5 * (lo + hi); }
};

}  // namespace batfun
