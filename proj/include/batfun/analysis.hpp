#pragma once

#include <string>
#include <vector>

#include "batfun/bateman.hpp"
#include "batfun/enclosure.hpp"

namespace batfun {

/// Positive zeros of F_n in ascending order (the origin root is implicit);
/// t_last is the largest zero T_n, taken as the point 0 for n = 1 so the
/// "last zero" is total.
struct ZeroSet {
  int n;
  std::vector<Enclosure> zeros;
  Enclosure t_last;
};

/// Critical points of F_n (zeros of p_n' - p_n) in ascending order,
/// together with |F_n| at each and the global maximum at the last one.
struct ExtremaReport {
  int n;
  std::vector<Enclosure> critical_points;
  Enclosure t_star;
  Enclosure max_abs;
  std::vector<Enclosure> local_max_values;
};

struct CheckItem {
  std::string id;
  bool applicable;
  bool pass;
  std::string detail;
};

struct ZeroBoundReport {
  int n;
  std::vector<CheckItem> checks;
  bool all_pass() const;
};

ZeroSet zero_set(BatemanTable& table, int n, const Rational& width);

ExtremaReport extrema(BatemanTable& table, int n, const Rational& width);

/// T_n only (rightmost-root isolation; cheap for large n).
Enclosure largest_zero(BatemanTable& table, int n, const Rational& width);

/// T_n* only.
Enclosure largest_critical_point(BatemanTable& table, int n, const Rational& width);

/// Certifies that every zero of p_n' - p_n lies in (0, 2n), without
/// isolating any root: Descartes variation counts of the shifted and the
/// mirrored polynomial are both zero.
bool critical_points_in_0_2n(BatemanTable& table, int n);

/// Zero/extremum fact battery:
///   t-upper    : T_n < 2n - 1
///   bottema    : T_n > 2n - 3/2 - 8 sqrt(2(n-1))   (n >= 33)
///   in-range   : all zeros inside [0, 2n), largest inflection at t = 2n
///   maxima-inc : successive relative maxima of |F_n| strictly increase
///   ratio      : T_n / n reported as data (tends to 2)
/// with_extrema enables the two checks that need full root isolation.
ZeroBoundReport zero_bound_checks(BatemanTable& table, int n, bool with_extrema);

}  // namespace batfun
