#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "batfun/bateman.hpp"

using namespace batfun;

namespace {

RatPoly poly(std::initializer_list<Rational> coeffs) {
  return RatPoly(std::vector<Rational>(coeffs));
}

}  // namespace

TEST_CASE("recurrence matches the printed low-order polynomials") {
  BatemanTable table;
  CHECK(table.poly(0) == RatPoly(Rational(1)));
  CHECK(table.poly(1) == poly({0, -2}));
  CHECK(table.poly(2) == poly({0, -2, 2}));
  // (2/3) t (-3 + 9t - 6t^2 + t^3)
  CHECK(table.poly(4) ==
        poly({0, -2, 6, -4, make_rational(2, 3)}));
  // (2/15) t (-15 + 60t - 60t^2 + 20t^3 - 2t^4)
  CHECK(table.poly(5) ==
        poly({0, -2, 8, -8, make_rational(8, 3), make_rational(-4, 15)}));
}

TEST_CASE("structural invariants up to n = 60") {
  BatemanTable table;
  for (int n = 1; n <= 60; ++n) {
    const RatPoly& p = table.poly(n);
    CHECK(p.degree() == n);
    CHECK(sgn(p.coeff(0)) == 0);
    CHECK(p.coeff(1) == -2);  // p_n'(0) = -2
    Rational lead = make_rational(Integer(1) << n, factorial(n));
    if (n % 2) lead = -lead;
    CHECK(p.leading_coeff() == lead);
  }
}

TEST_CASE("all seven constructions agree with the recurrence") {
  BatemanTable table;
  // Spot examples first.
  CHECK(bateman_poly_alt(2, Method::Explicit) == poly({0, -2, 2}));
  CHECK(bateman_poly_alt(2, Method::Hypergeometric) == poly({0, -2, 2}));
  CHECK(bateman_poly_alt(1, Method::Residue) == poly({0, -2}));

  for (int n = 1; n <= 12; ++n)
    for (Method m : all_methods())
      CHECK(bateman_poly_alt(n, m) == table.poly(n));

  // The cheap routes stay exact much further out.
  for (int n : {25, 40, 50}) {
    CHECK(bateman_poly_alt(n, Method::Explicit) == table.poly(n));
    CHECK(bateman_poly_alt(n, Method::Residue) == table.poly(n));
    CHECK(bateman_poly_alt(n, Method::LaguerreDiff) == table.poly(n));
  }

  CHECK(bateman_poly_alt(0, Method::GenFunc) == RatPoly(Rational(1)));
  CHECK_THROWS(bateman_poly_alt(2, static_cast<Method>(99)));
  CHECK_THROWS(method_from_string("fourier"));
  for (Method m : all_methods()) CHECK(method_from_string(method_name(m)) == m);
}

TEST_CASE("laguerre polynomials and the rodriguez route") {
  CHECK(laguerre_poly(0, 3) == RatPoly(Rational(1)));
  CHECK(laguerre_poly(1, 0) == poly({1, -1}));
  for (int n = 0; n <= 8; ++n)
    for (long alpha : {-1L, 0L, 1L, 2L, 3L})
      if (n + alpha >= 0)
        CHECK(laguerre_rodriguez(n, alpha) == laguerre_poly(n, alpha));

  // e^{-t}(L_2(2t) - L_1(2t)) = F_2.
  BatemanTable table;
  RatPoly diff = laguerre_poly(2, 0).compose_scale(Rational(2)) -
                 laguerre_poly(1, 0).compose_scale(Rational(2));
  CHECK(diff == table.poly(2));
}

TEST_CASE("derivative via the Laguerre route") {
  BatemanTable table;
  CHECK(bateman_derivative(1).poly() == poly({-2, 2}));
  CHECK(bateman_derivative(1).poly().eval(Rational(0)) == -2);
  for (int n = 1; n <= 20; ++n)
    CHECK(bateman_derivative(n) == table.fn_derivative(n));
}

TEST_CASE("generalized functions") {
  BatemanTable table;
  for (int n = 0; n <= 10; ++n) CHECK(falpha(n, -1).poly() == table.poly(n));
  CHECK(falpha(0, 7).poly() == RatPoly(Rational(1)));
  CHECK(falpha(1, 1).poly() == poly({2, -2}));
}

TEST_CASE("H_n values") {
  BatemanTable table;
  ExpPoly h1 = table.h_fn(1);
  CHECK(h1.lambda() == 1);
  CHECK(h1.poly() == poly({0, 2}));
  ExpPoly h2 = table.h_fn(2);
  CHECK(h2.lambda() == 2);
  CHECK(h2.poly().eval(Rational(2)) == 24);  // H_2(2) = 24 e^{-4}
  Enclosure v = h2.eval_enclosed(Rational(2), 96);
  CHECK(v.lo < rational_from_string("0.43958"));
  CHECK(v.hi > rational_from_string("0.43957"));
}

TEST_CASE("identity suite is exactly zero (with the flagged recurrence)") {
  BatemanTable table;
  for (int n : {1, 2, 3, 7, 12})
    for (long alpha : {-1L, 0L, 1L, 2L})
      for (const auto& rep : identity_suite(table, n, alpha)) {
        INFO(rep.id << " n=" << rep.n << " alpha=" << rep.alpha << " " << rep.detail);
        CHECK(rep.pass);
      }
}

TEST_CASE("exact integrals") {
  BatemanTable table;
  CHECK(inner_product(table, 3, 3) == 1);
  CHECK(inner_product(table, 2, 5) == 0);
  CHECK(inner_product(table, 1, 2) == make_rational(-1, 2));
  CHECK(abs(inner_product(table, 4, 5)) == make_rational(1, 2));
  CHECK(weighted_norm(table, 4) == make_rational(1, 2));
  for (int n = 1; n <= 10; ++n) CHECK(weighted_norm(table, n) == make_rational(2, n));

  CHECK(laplace_exact(table, 3, Rational(1)) == 0);
  CHECK(laplace_closed_form(3, Rational(1)) == 0);
  for (int k = 1; k <= 12; ++k)
    for (Rational z : {make_rational(1, 3), Rational(2), make_rational(7, 2)})
      CHECK(laplace_exact(table, k, z) == laplace_closed_form(k, z));

  auto rec = exact_integrals(table, 3, 5);
  CHECK(rec.norm == 1);
  CHECK(rec.cross == 0);
  CHECK(rec.weighted == make_rational(2, 3));
  CHECK(rec.laplace_at_1 == rec.laplace_closed_at_1);
}

TEST_CASE("parseval partial sums") {
  Enclosure s0 = parseval_partial(Rational(1), 0, 96);
  CHECK(s0.lo > rational_from_string("0.13533"));
  CHECK(s0.hi < rational_from_string("0.13534"));

  // Exact polynomial-part sums: nondecreasing always, strict whenever the
  // added term is nonzero (p_2(1) = 0 gives the one flat step early on).
  auto v = bateman_poly_values(Rational(1), 51);
  Rational q(0), prev(0);
  for (int K = 0; K <= 50; ++K) {
    q += v[K] * v[K];
    CHECK(q >= prev);
    if (sgn(v[K]) != 0 && K > 0) CHECK(q > prev);
    prev = q;
    Enclosure s = parseval_partial(Rational(1), K, 128);
    CHECK(s.hi < 1);
    CHECK(s.lo > 0);
  }
}
