#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "batfun/roots.hpp"

using namespace batfun;

namespace {

RatPoly poly(std::initializer_list<long> coeffs) {
  std::vector<Rational> c;
  for (long v : coeffs) c.emplace_back(v);
  return RatPoly(std::move(c));
}

}  // namespace

TEST_CASE("single root at origin") {
  auto r = isolate_real_roots(RatPoly::monomial(1, Rational(1)));
  REQUIRE(r.size() == 1);
  CHECK(r[0].is_point());
  CHECK(r[0].lo == 0);
}

TEST_CASE("polynomial part of F_2: roots 0 and 1") {
  auto r = isolate_real_roots(poly({0, -1, 1}));  // t(t-1)
  REQUIRE(r.size() == 2);
  CHECK(r[0].contains(Rational(0)));
  CHECK(r[1].contains(Rational(1)));
}

TEST_CASE("inner factor of F_3: (3 +- sqrt 3)/2") {
  RatPoly p = poly({-3, 6, -2});
  auto r = isolate_real_roots(p);
  REQUIRE(r.size() == 2);
  for (auto& e : r) refine_root(p, e, make_rational(1, 1'000'000));
  CHECK(r[0].contains(rational_from_string("0.633974596215561")));
  CHECK(r[1].contains(rational_from_string("2.366025403784438")));
}

TEST_CASE("zero polynomial rejected") {
  CHECK_THROWS(isolate_real_roots(RatPoly()));
}

TEST_CASE("products of distinct linear factors") {
  // (t-1)(t-2)(t+3)(t - 1/2) * t
  RatPoly p = poly({0, 1}) * poly({-1, 1}) * poly({-2, 1}) * poly({3, 1}) *
              RatPoly(std::vector<Rational>{make_rational(-1, 2), Rational(1)});
  auto r = isolate_real_roots(p);
  REQUIRE(r.size() == 5);
  Rational expect[] = {Rational(-3), Rational(0), make_rational(1, 2), Rational(1), Rational(2)};
  for (int i = 0; i < 5; ++i) {
    refine_root(p, r[i], make_rational(1, 1024));
    CHECK(r[i].contains(expect[i]));
  }
  // Disjointness.
  for (int i = 0; i + 1 < 5; ++i) CHECK(r[i].hi < r[i + 1].lo);
}

TEST_CASE("repeated roots collapse to one enclosure") {
  RatPoly p = poly({-1, 1}) * poly({-1, 1}) * poly({-5, 1});
  auto r = isolate_real_roots(p);
  REQUIRE(r.size() == 2);
  CHECK(r[0].contains(Rational(1)));
  CHECK(r[1].contains(Rational(5)));
}

TEST_CASE("domain restriction") {
  RatPoly p = poly({0, -1, 1});  // roots 0, 1
  auto r = isolate_real_roots(p, std::make_pair(make_rational(1, 4), Rational(9)));
  REQUIRE(r.size() == 1);
  CHECK(r[0].contains(Rational(1)));
  auto all = isolate_real_roots(p, std::make_pair(Rational(0), Rational(9)));
  CHECK(all.size() == 2);
}

TEST_CASE("largest real root") {
  RatPoly p = poly({-2, 0, 1});  // +-sqrt 2
  auto e = largest_real_root(p);
  REQUIRE(e.has_value());
  refine_root(p, *e, make_rational(1, 1'000'000));
  CHECK(e->contains(rational_from_string("1.41421356")));

  auto neg = largest_real_root(poly({2, 3, 1}));  // roots -1, -2
  REQUIRE(neg.has_value());
  refine_root(poly({2, 3, 1}), *neg, make_rational(1, 1024));
  CHECK(neg->contains(Rational(-1)));

  CHECK(!largest_real_root(poly({1, 0, 1})).has_value());
}

TEST_CASE("refinement to requested width") {
  RatPoly p = poly({-3, 6, -2});
  auto r = isolate_real_roots(p);
  Rational w = make_rational(1, Integer(1) << 40);
  for (auto& e : r) {
    refine_root(p, e, w);
    CHECK(e.width() <= w);
  }
}
