#include "batfun/analysis.hpp"

#include <sstream>
#include <stdexcept>

#include "batfun/roots.hpp"

namespace batfun {

namespace {

RatPoly critical_poly(BatemanTable& table, int n) {
  const RatPoly& p = table.poly(n);
  return p.derivative() - p;
}

std::string dec(const Rational& q) {
  std::ostringstream os;
  os << q.get_d();
  return os.str();
}

}  // namespace

bool ZeroBoundReport::all_pass() const {
  for (const auto& c : checks)
    if (c.applicable && !c.pass) return false;
  return true;
}

ZeroSet zero_set(BatemanTable& table, int n, const Rational& width) {
  if (n < 1 || sgn(width) <= 0)
    throw std::invalid_argument("zero_set: n >= 1 and width > 0 required");
  ZeroSet zs;
  zs.n = n;
  if (n == 1) {
    zs.t_last = Enclosure(Rational(0));
    return zs;
  }
  RatPoly inner = table.poly(n).shift_down(1);
  zs.zeros = isolate_real_roots(inner, std::nullopt, /*assume_squarefree=*/true);
  for (auto& e : zs.zeros) refine_root(inner, e, width);
  zs.t_last = zs.zeros.back();
  return zs;
}

Enclosure largest_zero(BatemanTable& table, int n, const Rational& width) {
  if (n < 1) throw std::invalid_argument("largest_zero: n >= 1 required");
  if (n == 1) return Enclosure(Rational(0));
  RatPoly inner = table.poly(n).shift_down(1);
  auto e = largest_real_root(inner, /*assume_squarefree=*/true);
  if (!e) throw std::logic_error("largest_zero: no real root found");
  refine_root(inner, *e, width);
  return *e;
}

Enclosure largest_critical_point(BatemanTable& table, int n, const Rational& width) {
  if (n < 1) throw std::invalid_argument("largest_critical_point: n >= 1 required");
  RatPoly q = critical_poly(table, n);
  auto e = largest_real_root(q, /*assume_squarefree=*/true);
  if (!e) throw std::logic_error("largest_critical_point: no real root found");
  refine_root(q, *e, width);
  return *e;
}

bool critical_points_in_0_2n(BatemanTable& table, int n) {
  RatPoly q = critical_poly(table, n);
  if (sign_at(q, Rational(0)) == 0 || sign_at(q, Rational(2 * n)) == 0) return false;
  // No roots >= 2n and no roots <= 0: both shifted variation counts vanish.
  if (descartes_variations(q.compose_shift(Rational(2 * n))) != 0) return false;
  if (descartes_variations(q.compose_scale(Rational(-1))) != 0) return false;
  return true;
}

ExtremaReport extrema(BatemanTable& table, int n, const Rational& width) {
  if (n < 1 || sgn(width) <= 0)
    throw std::invalid_argument("extrema: n >= 1 and width > 0 required");
  ExtremaReport rep;
  rep.n = n;
  RatPoly q = critical_poly(table, n);
  rep.critical_points = isolate_real_roots(q, std::nullopt, /*assume_squarefree=*/true);
  for (auto& e : rep.critical_points) refine_root(q, e, width);
  ExpPoly f = table.fn(n);
  for (auto& e : rep.critical_points) {
    // Interval evaluation of e^{-t} p(t) loses to cancellation among the
    // large alternating terms of p, so squeeze the location until the
    // value enclosure itself reaches the requested width.
    Enclosure v = f.eval_over(e, 160);
    Rational w = width;
    for (int prec = 256; v.width() > width && prec <= 640; prec += 128) {
      w /= Integer(1) << 24;
      refine_root(q, e, w);
      v = f.eval_over(e, prec);
    }
    rep.local_max_values.push_back(v.abs());
  }
  rep.t_star = rep.critical_points.back();
  // The value at a critical point is flat in t, so a modest extra squeeze
  // on the location already gives a very tight value enclosure.
  refine_root(q, rep.t_star, width / 4096);
  rep.max_abs = f.eval_over(rep.t_star, 224).abs();
  return rep;
}

ZeroBoundReport zero_bound_checks(BatemanTable& table, int n, bool with_extrema) {
  if (n < 1) throw std::invalid_argument("zero_bound_checks: n >= 1 required");
  ZeroBoundReport rep;
  rep.n = n;
  const Rational width = make_rational(1, Integer(1) << 30);
  Enclosure T = largest_zero(table, n, width);

  {
    Rational rhs(2 * n - 1);
    rep.checks.push_back({"t-upper", true, T.strictly_below(rhs),
                          "margin " + dec(rhs - T.hi)});
  }
  {
    bool applicable = n >= 33;
    bool pass = false;
    std::string detail;
    if (applicable) {
      Enclosure rhs = Enclosure(Rational(2 * n) - make_rational(3, 2)) -
                      enclose_sqrt(Rational(2 * (n - 1)), 128) * Rational(8);
      pass = rhs.strictly_below(T);
      detail = "margin " + dec(T.lo - rhs.hi);
    }
    rep.checks.push_back({"bottema", applicable, pass, detail});
  }
  if (with_extrema) {
    ZeroSet zs = zero_set(table, n, width);
    bool in_range = static_cast<int>(zs.zeros.size()) == n - 1;
    for (const auto& z : zs.zeros)
      in_range = in_range && sgn(z.lo) > 0 && z.hi < 2 * n;
    // From t F'' = (t - 2n) F the polynomial part of F'' vanishes at 2n:
    // the largest inflection point.
    const RatPoly& p = table.poly(n);
    RatPoly u = p.derivative() - p;
    RatPoly w = u.derivative() - u;
    in_range = in_range && sgn(w.eval(Rational(2 * n))) == 0;
    rep.checks.push_back({"in-range", true, in_range, ""});

    ExtremaReport ex = extrema(table, n, width);
    bool inc = static_cast<int>(ex.critical_points.size()) == n;
    for (std::size_t i = 0; i + 1 < ex.local_max_values.size() && inc; ++i)
      inc = ex.local_max_values[i].strictly_below(ex.local_max_values[i + 1]);
    rep.checks.push_back({"maxima-inc", true, inc, ""});
  }
  rep.checks.push_back({"ratio", true, true, "T_n/n = " + dec(T.mid() / n)});
  return rep;
}

}  // namespace batfun
