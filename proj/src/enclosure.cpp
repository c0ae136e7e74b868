#include "batfun/enclosure.hpp"

#include <gmp.h>
#include <mpfr.h>

#include <sstream>
#include <stdexcept>

namespace batfun {

Enclosure::Enclosure(Rational l, Rational h) : lo(std::move(l)), hi(std::move(h)) {
  if (lo > hi) throw std::invalid_argument("Enclosure: lo > hi");
}

Enclosure Enclosure::operator*(const Enclosure& o) const {
  Rational a = lo * o.lo, b = lo * o.hi, c = hi * o.lo, d = hi * o.hi;
  Rational mn = a, mx = a;
  for (const Rational* v : {&b, &c, &d}) {
    if (*v < mn) mn = *v;
    if (*v > mx) mx = *v;
  }
  return {mn, mx};
}

Enclosure Enclosure::operator*(const Rational& s) const {
  if (sgn(s) >= 0) return {lo * s, hi * s};
  return {hi * s, lo * s};
}

Enclosure Enclosure::inverse() const {
  if (contains_zero()) throw std::domain_error("Enclosure::inverse: interval contains zero");
  return {1 / hi, 1 / lo};
}

Enclosure Enclosure::abs() const {
  if (sgn(lo) >= 0) return *this;
  if (sgn(hi) <= 0) return -*this;
  return {Rational(0), std::max(Rational(-lo), hi)};
}

Enclosure Enclosure::hull(const Enclosure& a, const Enclosure& b) {
  return {std::min(a.lo, b.lo), std::max(a.hi, b.hi)};
}

std::string Enclosure::to_string() const {
  std::ostringstream os;
  os << "[" << lo.get_str() << ", " << hi.get_str() << "]";
  return os.str();
}

namespace {

Rational mpfr_to_rational(const mpfr_t x) {
  Rational q;
  mpfr_get_q(q.get_mpq_t(), x);
  return q;
}

// f applied with both rounding directions to a rational argument.
template <typename Fn>
Enclosure directed(const Rational& x, int prec, Fn&& f, bool decreasing) {
  mpfr_t a, lo, hi;
  mpfr_init2(a, prec + 8);
  mpfr_init2(lo, prec);
  mpfr_init2(hi, prec);
  // Lower endpoint.
  mpfr_set_q(a, x.get_mpq_t(), decreasing ? MPFR_RNDU : MPFR_RNDD);
  f(lo, a, MPFR_RNDD);
  // Upper endpoint.
  mpfr_set_q(a, x.get_mpq_t(), decreasing ? MPFR_RNDD : MPFR_RNDU);
  f(hi, a, MPFR_RNDU);
  Enclosure e(mpfr_to_rational(lo), mpfr_to_rational(hi));
  mpfr_clears(a, lo, hi, nullptr);
  return e;
}

}  // namespace

Enclosure enclose_exp_neg(const Rational& x, int prec) {
  return directed(
      x, prec,
      [](mpfr_t out, const mpfr_t in, mpfr_rnd_t rnd) {
        mpfr_neg(out, in, MPFR_RNDN);  // exact
        mpfr_exp(out, out, rnd);
      },
      /*decreasing=*/true);
}

Enclosure enclose_sqrt(const Rational& x, int prec) {
  if (sgn(x) < 0) throw std::domain_error("enclose_sqrt: negative argument");
  return directed(
      x, prec,
      [](mpfr_t out, const mpfr_t in, mpfr_rnd_t rnd) { mpfr_sqrt(out, in, rnd); },
      /*decreasing=*/false);
}

Enclosure enclose_e(int prec) {
  mpfr_t lo, hi;
  mpfr_init2(lo, prec);
  mpfr_init2(hi, prec);
  mpfr_set_ui(lo, 1, MPFR_RNDN);
  mpfr_exp(lo, lo, MPFR_RNDD);
  mpfr_set_ui(hi, 1, MPFR_RNDN);
  mpfr_exp(hi, hi, MPFR_RNDU);
  Enclosure e(mpfr_to_rational(lo), mpfr_to_rational(hi));
  mpfr_clears(lo, hi, nullptr);
  return e;
}

Enclosure enclose_two_over_e(int prec) {
  Enclosure ee = enclose_e(prec + 8);
  return Rational(2) * ee.inverse();
}

Enclosure enclose_e_over_sqrt2(int prec) {
  Enclosure ee = enclose_e(prec + 8);
  Enclosure r2 = enclose_sqrt2(prec + 8);
  return ee * r2.inverse();
}

Enclosure enclose_sqrt2(int prec) { return enclose_sqrt(Rational(2), prec); }

}  // namespace batfun
