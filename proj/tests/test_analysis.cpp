#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "batfun/analysis.hpp"
#include "batfun/roots.hpp"

using namespace batfun;

namespace {
const Rational kWidth = make_rational(1, 1 << 20);
}

TEST_CASE("zero sets of the first functions") {
  BatemanTable table;
  ZeroSet z1 = zero_set(table, 1, kWidth);
  CHECK(z1.zeros.empty());
  CHECK(z1.t_last.is_point());
  CHECK(z1.t_last.lo == 0);

  ZeroSet z2 = zero_set(table, 2, kWidth);
  REQUIRE(z2.zeros.size() == 1);
  CHECK(z2.zeros[0].contains(Rational(1)));

  ZeroSet z3 = zero_set(table, 3, kWidth);
  REQUIRE(z3.zeros.size() == 2);
  CHECK(z3.zeros[0].contains(rational_from_string("0.633974596")));
  CHECK(z3.zeros[1].contains(rational_from_string("2.366025403")));
  CHECK(z3.t_last.contains(rational_from_string("2.366025403")));
}

TEST_CASE("zeros agree with the Laguerre route") {
  BatemanTable table;
  for (int n : {2, 3, 5, 8, 13}) {
    ZeroSet zs = zero_set(table, n, kWidth);
    RatPoly l1 = laguerre_poly(n - 1, 1).compose_scale(Rational(2));
    auto lr = isolate_real_roots(l1, std::nullopt, true);
    REQUIRE(lr.size() == zs.zeros.size());
    for (std::size_t i = 0; i < lr.size(); ++i) {
      refine_root(l1, lr[i], kWidth);
      // Same root: the refined enclosures must overlap.
      CHECK(lr[i].lo <= zs.zeros[i].hi);
      CHECK(zs.zeros[i].lo <= lr[i].hi);
    }
  }
}

TEST_CASE("zero counts and simplicity up to n = 40") {
  BatemanTable table;
  for (int n = 2; n <= 40; ++n) {
    ZeroSet zs = zero_set(table, n, make_rational(1, 1024));
    CHECK(static_cast<int>(zs.zeros.size()) == n - 1);
    for (std::size_t i = 0; i + 1 < zs.zeros.size(); ++i)
      CHECK(zs.zeros[i].hi < zs.zeros[i + 1].lo);
    CHECK(zs.t_last.hi < 2 * n - 1);
  }
}

TEST_CASE("extrema of F_1 and F_2") {
  BatemanTable table;
  ExtremaReport e1 = extrema(table, 1, kWidth);
  REQUIRE(e1.critical_points.size() == 1);
  CHECK(e1.t_star.contains(Rational(1)));
  Enclosure te = enclose_two_over_e(160);
  CHECK(e1.max_abs.lo <= te.hi);
  CHECK(e1.max_abs.hi >= te.lo);

  ExtremaReport e2 = extrema(table, 2, kWidth);
  REQUIRE(e2.critical_points.size() == 2);
  // T_2* = (3+sqrt 5)/2 = 2.61803398874989...
  CHECK(e2.t_star.lo > rational_from_string("2.6180339887"));
  CHECK(e2.t_star.hi < rational_from_string("2.6180339888"));
  CHECK(e2.max_abs.lo > rational_from_string("0.6180"));
  CHECK(e2.max_abs.hi < rational_from_string("0.6181"));
  // T_2 < T_2* < 4.
  ZeroSet z2 = zero_set(table, 2, kWidth);
  CHECK(z2.t_last.strictly_below(e2.t_star.lo));
  CHECK(e2.t_star.hi < 4);
}

TEST_CASE("critical points stay below 2n") {
  BatemanTable table;
  for (int n = 1; n <= 60; ++n) CHECK(critical_points_in_0_2n(table, n));
}

TEST_CASE("largest zero / critical point match the full isolation") {
  BatemanTable table;
  for (int n : {2, 4, 9}) {
    ZeroSet zs = zero_set(table, n, kWidth);
    Enclosure tl = largest_zero(table, n, kWidth);
    CHECK(tl.lo <= zs.t_last.hi);
    CHECK(zs.t_last.lo <= tl.hi);
    ExtremaReport ex = extrema(table, n, kWidth);
    Enclosure ts = largest_critical_point(table, n, kWidth);
    CHECK(ts.lo <= ex.t_star.hi);
    CHECK(ex.t_star.lo <= ts.hi);
  }
}

TEST_CASE("zero bound battery") {
  BatemanTable table;
  for (int n : {1, 2, 3, 10, 33, 40}) {
    ZeroBoundReport rep = zero_bound_checks(table, n, /*with_extrema=*/n <= 10);
    INFO("n = " << n);
    CHECK(rep.all_pass());
    bool saw_bottema = false;
    for (const auto& c : rep.checks)
      if (c.id == "bottema") saw_bottema = c.applicable;
    CHECK(saw_bottema == (n >= 33));
  }
}
