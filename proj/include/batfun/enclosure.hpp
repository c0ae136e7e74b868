#pragma once

#include <string>

#include "batfun/rational.hpp"

namespace batfun {

/// Rational interval [lo, hi] certified to contain a real quantity.
struct Enclosure {
  Rational lo, hi;

  Enclosure() : lo(0), hi(0) {}
  explicit Enclosure(const Rational& v) : lo(v), hi(v) {}
  Enclosure(Rational l, Rational h);

  bool is_point() const { return lo == hi; }
  bool contains(const Rational& v) const { return lo <= v && v <= hi; }
  bool contains_zero() const { return sgn(lo) <= 0 && sgn(hi) >= 0; }
  bool contains(const Enclosure& o) const { return lo <= o.lo && o.hi <= hi; }
  Rational width() const { return hi - lo; }
  Rational mid() const { return (lo + hi) / 2; }

  /// True when every point of *this is strictly below every point of o.
  bool strictly_below(const Enclosure& o) const { return hi < o.lo; }
  bool strictly_below(const Rational& v) const { return hi < v; }
  bool strictly_above(const Rational& v) const { return lo > v; }

  Enclosure operator+(const Enclosure& o) const { return {lo + o.lo, hi + o.hi}; }
  Enclosure operator-(const Enclosure& o) const { return {lo - o.hi, hi - o.lo}; }
  Enclosure operator-() const { return {-hi, -lo}; }
  Enclosure operator*(const Enclosure& o) const;
  Enclosure operator*(const Rational& s) const;
  Enclosure operator+(const Rational& s) const { return {lo + s, hi + s}; }
  Enclosure operator-(const Rational& s) const { return {lo - s, hi - s}; }

  /// Reciprocal; requires the interval to exclude zero.
  Enclosure inverse() const;

  Enclosure abs() const;

  static Enclosure hull(const Enclosure& a, const Enclosure& b);

  double mid_double() const { return mid().get_d(); }
  std::string to_string() const;
};

inline Enclosure operator*(const Rational& s, const Enclosure& e) { return e * s; }

/// Directed-rounding enclosure of e^{-x} at `prec` bits.
Enclosure enclose_exp_neg(const Rational& x, int prec);

/// Enclosure of sqrt(x), x >= 0.
Enclosure enclose_sqrt(const Rational& x, int prec);

Enclosure enclose_e(int prec);
Enclosure enclose_two_over_e(int prec);
Enclosure enclose_e_over_sqrt2(int prec);
Enclosure enclose_sqrt2(int prec);

}  // namespace batfun
