#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "batfun/bateman.hpp"
#include "batfun/quadrature.hpp"

using namespace batfun;

TEST_CASE("cosine integral at t = 0") {
  QuadResult r0 = bateman_integral(0, Rational(0), 1e-10);
  CHECK(std::fabs(r0.value - 1.0) < 1e-9);
  QuadResult r3 = bateman_integral(3, Rational(0), 1e-10);
  CHECK(std::fabs(r3.value) < 1e-9);
}

TEST_CASE("cosine integral matches the exact pipeline") {
  BatemanTable table;
  QuadResult r = bateman_integral(1, Rational(1), 1e-9);
  CHECK(std::fabs(r.value - (-2.0 / std::exp(1.0))) < 1e-8);

  for (int n : {1, 2, 5, 10})
    for (Rational t : {make_rational(1, 2), Rational(1), Rational(2), Rational(5)}) {
      QuadResult q = bateman_integral(n, t, 1e-9);
      double exact = table.fn(n).eval_enclosed(t, 96).mid_double();
      INFO("n=" << n << " t=" << t.get_d() << " quad=" << q.value
                << " exact=" << exact << " est=" << q.error_estimate);
      CHECK(std::fabs(q.value - exact) < 1e-8);
    }
}

TEST_CASE("fourier integral matches the exact pipeline") {
  BatemanTable table;
  for (int k : {1, 2, 3, 4, 5}) {
    QuadResult q = fourier_integral(k, Rational(1), 1e-6);
    double exact = table.fn(k).eval_enclosed(Rational(1), 96).mid_double();
    INFO("k=" << k << " quad=" << q.value << " exact=" << exact);
    CHECK(std::fabs(q.value - exact) < 1e-6);
    CHECK(q.imag_residual < 1e-5);
  }
}

TEST_CASE("fourier truncation control") {
  CHECK_THROWS_AS(fourier_integral(1, Rational(1), 1e-8, 10.0), std::domain_error);
  // A generous explicit truncation for a loose tolerance is accepted.
  QuadResult q = fourier_integral(2, Rational(1), 1e-3, 2000.0);
  CHECK(std::fabs(q.value) < 2e-3);  // F_2(1) = 0
}

TEST_CASE("argument validation") {
  CHECK_THROWS(bateman_integral(-1, Rational(1), 1e-8));
  CHECK_THROWS(bateman_integral(1, Rational(-1), 1e-8));
  CHECK_THROWS(fourier_integral(0, Rational(1), 1e-8));
  CHECK_THROWS(fourier_integral(1, Rational(0), 1e-8));
}
