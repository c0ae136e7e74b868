#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "batfun/rational.hpp"

namespace batfun {

/// Dense polynomial in t with exact rational coefficients.
/// Invariant: the highest stored coefficient is nonzero; the zero
/// polynomial stores an empty coefficient list and has degree -1.
class RatPoly {
 public:
  RatPoly() = default;
  explicit RatPoly(std::vector<Rational> coeffs);
  explicit RatPoly(const Rational& constant);

  static RatPoly monomial(std::size_t power, const Rational& coeff);

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

  /// Coefficient of t^k (zero beyond the degree).
  const Rational& coeff(std::size_t k) const;
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  const Rational& leading_coeff() const;

  RatPoly operator+(const RatPoly& o) const;
  RatPoly operator-(const RatPoly& o) const;
  RatPoly operator-() const;
  RatPoly operator*(const RatPoly& o) const;
  RatPoly operator*(const Rational& s) const;
  bool operator==(const RatPoly& o) const { return coeffs_ == o.coeffs_; }

  RatPoly derivative() const;

  /// Substitution t -> c*t.
  RatPoly compose_scale(const Rational& c) const;

  /// Substitution t -> t + c (exact Taylor shift).
  RatPoly compose_shift(const Rational& c) const;

  Rational eval(const Rational& t) const;

  /// Quotient of exact division; aborts if the division leaves a remainder.
  RatPoly divide_exact(const RatPoly& divisor) const;

  /// Quotient/remainder over the rationals (divisor nonzero).
  std::pair<RatPoly, RatPoly> divmod(const RatPoly& divisor) const;

  /// p / t^k for a polynomial divisible by t^k.
  RatPoly shift_down(std::size_t k) const;

  /// Multiplies out all denominators and divides by the integer content,
  /// giving a primitive integer polynomial with the same roots.
  std::vector<Integer> primitive_integer_coeffs() const;

  std::string to_string(const std::string& var = "t") const;

 private:
  void normalize();
  std::vector<Rational> coeffs_;
};

inline RatPoly operator*(const Rational& s, const RatPoly& p) { return p * s; }

/// gcd over Q[t], monic (or zero when both inputs are zero).
RatPoly poly_gcd(RatPoly a, RatPoly b);

/// p with repeated roots collapsed: p / gcd(p, p').
RatPoly squarefree_part(const RatPoly& p);

}  // namespace batfun
