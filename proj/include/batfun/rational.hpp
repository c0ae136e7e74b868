#pragma once

#include <gmpxx.h>

#include <string>

namespace batfun {

using Integer = mpz_class;
using Rational = mpq_class;

/// Canonical rational from a (possibly non-reduced) numerator/denominator pair.
inline Rational make_rational(const Integer& num, const Integer& den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline Rational make_rational(long num, long den) {
  return make_rational(Integer(num), Integer(den));
}

inline int sign(const Rational& q) { return sgn(q); }

inline Rational abs(const Rational& q) { return q < 0 ? Rational(-q) : q; }

/// base^exp for integer exp (exp < 0 requires base != 0).
Rational pow_rational(const Rational& base, long exp);

Integer factorial(unsigned long n);
Integer binomial(unsigned long n, unsigned long k);

/// Parses "num", "num/den" or a plain decimal like "-1.25" exactly.
Rational rational_from_string(const std::string& s);

std::string to_string(const Rational& q);

}  // namespace batfun
