#include "batfun/minterval.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace batfun {

MInterval::MInterval(int prec) : prec_(prec) {
  mpfr_init2(lo_, prec);
  mpfr_init2(hi_, prec);
  mpfr_set_zero(lo_, 1);
  mpfr_set_zero(hi_, 1);
}

MInterval::MInterval(const MInterval& o) : prec_(o.prec_) {
  mpfr_init2(lo_, prec_);
  mpfr_init2(hi_, prec_);
  mpfr_set(lo_, o.lo_, MPFR_RNDD);
  mpfr_set(hi_, o.hi_, MPFR_RNDU);
}

MInterval::MInterval(MInterval&& o) noexcept : prec_(o.prec_) {
  mpfr_init2(lo_, prec_);
  mpfr_init2(hi_, prec_);
  mpfr_swap(lo_, o.lo_);
  mpfr_swap(hi_, o.hi_);
}

MInterval& MInterval::operator=(MInterval o) {
  std::swap(prec_, o.prec_);
  mpfr_swap(lo_, o.lo_);
  mpfr_swap(hi_, o.hi_);
  return *this;
}

MInterval::~MInterval() {
  mpfr_clear(lo_);
  mpfr_clear(hi_);
}

MInterval MInterval::from_long(long v, int prec) {
  MInterval r(prec);
  mpfr_set_si(r.lo_, v, MPFR_RNDD);
  mpfr_set_si(r.hi_, v, MPFR_RNDU);
  return r;
}

MInterval MInterval::from_rational(const Rational& q, int prec) {
  MInterval r(prec);
  mpfr_set_q(r.lo_, q.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(r.hi_, q.get_mpq_t(), MPFR_RNDU);
  return r;
}

MInterval MInterval::e(int prec) {
  MInterval r(prec);
  mpfr_set_ui(r.lo_, 1, MPFR_RNDN);
  mpfr_exp(r.lo_, r.lo_, MPFR_RNDD);
  mpfr_set_ui(r.hi_, 1, MPFR_RNDN);
  mpfr_exp(r.hi_, r.hi_, MPFR_RNDU);
  return r;
}

MInterval MInterval::operator+(const MInterval& o) const {
  MInterval r(prec_);
  mpfr_add(r.lo_, lo_, o.lo_, MPFR_RNDD);
  mpfr_add(r.hi_, hi_, o.hi_, MPFR_RNDU);
  return r;
}

MInterval MInterval::operator-(const MInterval& o) const {
  MInterval r(prec_);
  mpfr_sub(r.lo_, lo_, o.hi_, MPFR_RNDD);
  mpfr_sub(r.hi_, hi_, o.lo_, MPFR_RNDU);
  return r;
}

MInterval MInterval::operator-() const {
  MInterval r(prec_);
  mpfr_neg(r.lo_, hi_, MPFR_RNDD);
  mpfr_neg(r.hi_, lo_, MPFR_RNDU);
  return r;
}

MInterval MInterval::operator*(const MInterval& o) const {
  MInterval r(prec_);
  mpfr_t t;
  mpfr_init2(t, prec_);
  // Lower bound: min of the four directed-down products.
  mpfr_mul(r.lo_, lo_, o.lo_, MPFR_RNDD);
  mpfr_mul(t, lo_, o.hi_, MPFR_RNDD);
  mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);
  mpfr_mul(t, hi_, o.lo_, MPFR_RNDD);
  mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);
  mpfr_mul(t, hi_, o.hi_, MPFR_RNDD);
  mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);
  // Upper bound.
  mpfr_mul(r.hi_, lo_, o.lo_, MPFR_RNDU);
  mpfr_mul(t, lo_, o.hi_, MPFR_RNDU);
  mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
  mpfr_mul(t, hi_, o.lo_, MPFR_RNDU);
  mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
  mpfr_mul(t, hi_, o.hi_, MPFR_RNDU);
  mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
  mpfr_clear(t);
  return r;
}

MInterval MInterval::operator/(const MInterval& o) const {
  if (o.contains_zero()) throw std::domain_error("MInterval: division by interval containing zero");
  MInterval r(prec_);
  mpfr_t t;
  mpfr_init2(t, prec_);
  mpfr_div(r.lo_, lo_, o.lo_, MPFR_RNDD);
  mpfr_div(t, lo_, o.hi_, MPFR_RNDD);
  mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);
  mpfr_div(t, hi_, o.lo_, MPFR_RNDD);
  mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);
  mpfr_div(t, hi_, o.hi_, MPFR_RNDD);
  mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);
  mpfr_div(r.hi_, lo_, o.lo_, MPFR_RNDU);
  mpfr_div(t, lo_, o.hi_, MPFR_RNDU);
  mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
  mpfr_div(t, hi_, o.lo_, MPFR_RNDU);
  mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
  mpfr_div(t, hi_, o.hi_, MPFR_RNDU);
  mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
  mpfr_clear(t);
  return r;
}

MInterval MInterval::sqrt() const {
  if (mpfr_sgn(lo_) < 0) throw std::domain_error("MInterval::sqrt: negative interval");
  MInterval r(prec_);
  mpfr_sqrt(r.lo_, lo_, MPFR_RNDD);
  mpfr_sqrt(r.hi_, hi_, MPFR_RNDU);
  return r;
}

MInterval MInterval::rootn(unsigned long k) const {
  if (mpfr_sgn(lo_) < 0) throw std::domain_error("MInterval::rootn: negative interval");
  MInterval r(prec_);
  mpfr_rootn_ui(r.lo_, lo_, k, MPFR_RNDD);
  mpfr_rootn_ui(r.hi_, hi_, k, MPFR_RNDU);
  return r;
}

MInterval MInterval::exp_neg() const {
  MInterval r(prec_);
  mpfr_t t;
  mpfr_init2(t, prec_);
  mpfr_neg(t, hi_, MPFR_RNDD);
  mpfr_exp(r.lo_, t, MPFR_RNDD);
  mpfr_neg(t, lo_, MPFR_RNDU);
  mpfr_exp(r.hi_, t, MPFR_RNDU);
  mpfr_clear(t);
  return r;
}

bool MInterval::strictly_below(const MInterval& o) const {
  return mpfr_cmp(hi_, o.lo_) < 0;
}

bool MInterval::strictly_positive() const { return mpfr_sgn(lo_) > 0; }

bool MInterval::contains_zero() const {
  return mpfr_sgn(lo_) <= 0 && mpfr_sgn(hi_) >= 0;
}

double MInterval::lo_double() const { return mpfr_get_d(lo_, MPFR_RNDD); }
double MInterval::hi_double() const { return mpfr_get_d(hi_, MPFR_RNDU); }

Enclosure MInterval::to_enclosure() const {
  Rational a, b;
  mpfr_get_q(a.get_mpq_t(), lo_);
  mpfr_get_q(b.get_mpq_t(), hi_);
  return {a, b};
}

}  // namespace batfun
