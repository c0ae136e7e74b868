#pragma once

#include <gmp.h>
#include <mpfr.h>

#include "batfun/enclosure.hpp"
#include "batfun/rational.hpp"

namespace batfun {

/// MPFR interval with outward (directed) rounding on every operation.
/// Used for fast rigorous evaluation of expressions with radicals and
/// exponentials; endpoints are binary floats, convertible exactly to
/// rational Enclosure endpoints.
class MInterval {
 public:
  explicit MInterval(int prec = 128);
  MInterval(const MInterval& o);
  MInterval(MInterval&& o) noexcept;
  MInterval& operator=(MInterval o);
  ~MInterval();

  static MInterval from_long(long v, int prec = 128);
  static MInterval from_rational(const Rational& q, int prec = 128);
  static MInterval e(int prec = 128);

  int prec() const { return prec_; }

  MInterval operator+(const MInterval& o) const;
  MInterval operator-(const MInterval& o) const;
  MInterval operator*(const MInterval& o) const;
  MInterval operator/(const MInterval& o) const;
  MInterval operator-() const;
  MInterval sqrt() const;
  MInterval rootn(unsigned long k) const;
  MInterval exp_neg() const;  // e^{-x}

  bool strictly_below(const MInterval& o) const;
  bool strictly_positive() const;
  bool contains_zero() const;

  double lo_double() const;
  double hi_double() const;
  Enclosure to_enclosure() const;

 private:
  mpfr_t lo_, hi_;
  int prec_;
  friend MInterval minterval_detail_make(int prec);
};

}  // namespace batfun
