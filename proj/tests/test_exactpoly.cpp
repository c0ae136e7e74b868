#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "batfun/enclosure.hpp"
#include "batfun/exppoly.hpp"
#include "batfun/ratpoly.hpp"
#include "batfun/series.hpp"

using namespace batfun;

namespace {

RatPoly poly(std::initializer_list<long> coeffs) {
  std::vector<Rational> c;
  for (long v : coeffs) c.emplace_back(v);
  return RatPoly(std::move(c));
}

}  // namespace

TEST_CASE("polynomial ring basics") {
  RatPoly t = RatPoly::monomial(1, Rational(1));
  CHECK((t + (-t)).is_zero());

  // (-2t) under t -> 2t gives -4t.
  RatPoly m2t = poly({0, -2});
  CHECK(m2t.compose_scale(Rational(2)) == poly({0, -4}));

  // (-2t)*(2t^2 - 2t) = -4t^3 + 4t^2.
  CHECK(m2t * poly({0, -2, 2}) == poly({0, 0, 4, -4}));

  CHECK(poly({0, -2}).derivative() == poly({-2}));
  CHECK(poly({0, -2, 2}).derivative() == poly({-2, 4}));
  CHECK(poly({7}).derivative().is_zero());
}

TEST_CASE("taylor shift and division") {
  RatPoly p = poly({1, 2, 1});  // (t+1)^2
  CHECK(p.compose_shift(Rational(-1)) == poly({0, 0, 1}));
  auto [q, r] = p.divmod(poly({1, 1}));
  CHECK(q == poly({1, 1}));
  CHECK(r.is_zero());
  CHECK(squarefree_part(p) == poly({1, 1}));
}

TEST_CASE("exponential moments") {
  CHECK(exp_moment(ExpPoly(Rational(1), poly({1}))) == Rational(1));
  // F_1^2 = 4t^2 e^{-2t} integrates to 1.
  CHECK(exp_moment(ExpPoly(Rational(2), poly({0, 0, 4}))) == Rational(1));
  // F_1 F_2 = e^{-2t}(-4t^3 + 4t^2) integrates to -1/2.
  CHECK(exp_moment(ExpPoly(Rational(2), poly({0, 0, 4, -4}))) == make_rational(-1, 2));
}

TEST_CASE("moment of a derivative equals -f(0)") {
  std::mt19937 rng(12345);
  std::uniform_int_distribution<long> num(-9, 9), den(1, 7);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<Rational> c;
    int deg = 1 + trial % 5;
    for (int i = 0; i <= deg; ++i) c.push_back(make_rational(num(rng), den(rng)));
    ExpPoly f(make_rational(den(rng), den(rng)), RatPoly(c));
    CHECK(exp_moment(f.derivative()) == -f.poly().coeff(0));
  }
}

TEST_CASE("series exponential") {
  PolySeries zero;
  zero.coeffs = {RatPoly()};
  auto e0 = series_exp(zero, 4);
  CHECK(e0.coeff(0) == RatPoly(Rational(1)));
  for (std::size_t k = 1; k <= 4; ++k) CHECK(e0.coeff(k).is_zero());

  // Generating function of the Bateman polynomial parts:
  // exp(-2t(z + z^2 + ...)); coefficient k is p_k.
  PolySeries s;
  s.coeffs.assign(6, RatPoly());
  for (std::size_t k = 1; k <= 5; ++k) s.coeffs[k] = poly({0, -2});
  auto g = series_exp(s, 5);
  CHECK(g.coeff(1) == poly({0, -2}));
  CHECK(g.coeff(2) == poly({0, -2, 2}));

  CHECK_THROWS(series_exp(PolySeries{{RatPoly(Rational(1))}}, 3));
}

TEST_CASE("series exp is multiplicative on split inputs") {
  PolySeries a, b, ab;
  a.coeffs = {RatPoly(), poly({0, 1}), poly({3})};
  b.coeffs = {RatPoly(), poly({0, 0, -2}), RatPoly(), poly({1, 1})};
  ab.coeffs.assign(5, RatPoly());
  for (std::size_t k = 0; k < 5; ++k) ab.coeffs[k] = a.coeff(k) + b.coeff(k);
  auto lhs = series_exp(ab, 4);
  auto rhs = series_mul(series_exp(a, 4), series_exp(b, 4), 4);
  for (std::size_t k = 0; k <= 4; ++k) CHECK(lhs.coeff(k) == rhs.coeff(k));
}

TEST_CASE("rigorous evaluation") {
  // F_0 at t = 0 is exactly 1.
  ExpPoly f0(Rational(1), poly({1}));
  Enclosure v0 = f0.eval_enclosed(Rational(0), 64);
  CHECK(v0.contains(Rational(1)));
  CHECK(v0.width() == 0);

  // F_1(1) = -2/e.
  ExpPoly f1(Rational(1), poly({0, -2}));
  Enclosure v1 = f1.eval_enclosed(Rational(1), 96);
  CHECK(v1.strictly_below(rational_from_string("-0.73575888")));
  CHECK(!v1.strictly_below(rational_from_string("-0.73575889")));

  // F_2(1) = 0 exactly: the polynomial part vanishes.
  ExpPoly f2(Rational(1), poly({0, -2, 2}));
  Enclosure v2 = f2.eval_enclosed(Rational(1), 64);
  CHECK(v2.contains(Rational(0)));
  CHECK(v2.width() == 0);

  // Width shrinks with precision.
  Enclosure w32 = f1.eval_enclosed(make_rational(1, 3), 32);
  Enclosure w128 = f1.eval_enclosed(make_rational(1, 3), 128);
  CHECK(w128.width() < w32.width());
  CHECK(w32.contains(w128));
}

TEST_CASE("constant enclosures") {
  // Reference decimals are truncations, so compare against a small ball.
  const Rational eps = make_rational(1, Integer("100000000000000"));
  Enclosure te = enclose_two_over_e(96);
  Rational te_ref = rational_from_string("0.7357588823428846");
  CHECK(te.lo < te_ref + eps);
  CHECK(te.hi > te_ref - eps);
  CHECK(te.width() < make_rational(1, 1'000'000'000));
  Enclosure es2 = enclose_e_over_sqrt2(96);
  Rational es2_ref = rational_from_string("1.92211551407955841");
  CHECK(es2.lo < es2_ref + eps);
  CHECK(es2.hi > es2_ref - eps);
  Enclosure r2 = enclose_sqrt2(96);
  CHECK((r2 * r2).contains(Rational(2)));
}
