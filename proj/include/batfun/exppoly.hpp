#pragma once

#include "batfun/enclosure.hpp"
#include "batfun/ratpoly.hpp"

namespace batfun {

/// t |-> e^{-lambda t} * poly(t) with lambda > 0 rational.
/// Closed under addition (same lambda), multiplication (lambdas add)
/// and differentiation; every exponential moment over [0, inf) is a
/// rational number.
class ExpPoly {
 public:
  ExpPoly() : lambda_(1) {}
  ExpPoly(Rational lambda, RatPoly poly);

  const Rational& lambda() const { return lambda_; }
  const RatPoly& poly() const { return poly_; }
  bool is_zero() const { return poly_.is_zero(); }

  ExpPoly operator+(const ExpPoly& o) const;  // requires equal lambda
  ExpPoly operator-(const ExpPoly& o) const;
  ExpPoly operator-() const { return ExpPoly(lambda_, -poly_); }
  ExpPoly operator*(const ExpPoly& o) const;  // lambdas add
  ExpPoly operator*(const Rational& s) const { return ExpPoly(lambda_, poly_ * s); }
  ExpPoly operator*(const RatPoly& p) const { return ExpPoly(lambda_, poly_ * p); }
  bool operator==(const ExpPoly& o) const;

  /// d/dt [e^{-lambda t} p] = e^{-lambda t} (p' - lambda p).
  ExpPoly derivative() const;

  /// Rigorous enclosure of the value at rational t (precision in bits, >= 8).
  Enclosure eval_enclosed(const Rational& t, int prec) const;

  /// Enclosure of the range over a rational interval [t.lo, t.hi], t.lo >= 0.
  Enclosure eval_over(const Enclosure& t, int prec) const;

 private:
  Rational lambda_;
  RatPoly poly_;
};

/// Exact value of the improper integral of f over [0, inf):
/// sum_k c_k * k! / lambda^{k+1}.
Rational exp_moment(const ExpPoly& f);

/// Polynomial r with d/dt [e^{-lambda t} r] = e^{-lambda t} q, i.e. the
/// exponential-weighted antiderivative; int_0^T e^{-lambda t} q =
/// e^{-lambda T} r(T) - r(0).
RatPoly exp_antiderivative(const Rational& lambda, const RatPoly& q);

}  // namespace batfun
