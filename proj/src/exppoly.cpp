#include "batfun/exppoly.hpp"

#include <stdexcept>
#include <utility>

namespace batfun {

ExpPoly::ExpPoly(Rational lambda, RatPoly poly)
    : lambda_(std::move(lambda)), poly_(std::move(poly)) {
  if (sgn(lambda_) <= 0) throw std::invalid_argument("ExpPoly: lambda must be positive");
}

ExpPoly ExpPoly::operator+(const ExpPoly& o) const {
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  if (lambda_ != o.lambda_)
    throw std::invalid_argument("ExpPoly: addition requires equal decay rates");
  return ExpPoly(lambda_, poly_ + o.poly_);
}

ExpPoly ExpPoly::operator-(const ExpPoly& o) const { return *this + (-o); }

ExpPoly ExpPoly::operator*(const ExpPoly& o) const {
  return ExpPoly(lambda_ + o.lambda_, poly_ * o.poly_);
}

bool ExpPoly::operator==(const ExpPoly& o) const {
  if (is_zero() && o.is_zero()) return true;
  return lambda_ == o.lambda_ && poly_ == o.poly_;
}

ExpPoly ExpPoly::derivative() const {
  return ExpPoly(lambda_, poly_.derivative() - poly_ * lambda_);
}

Enclosure ExpPoly::eval_enclosed(const Rational& t, int prec) const {
  if (prec < 8) throw std::invalid_argument("ExpPoly::eval_enclosed: precision < 8");
  Rational pv = poly_.eval(t);
  Enclosure ex = enclose_exp_neg(lambda_ * t, prec);
  return ex * pv;
}

Enclosure ExpPoly::eval_over(const Enclosure& t, int prec) const {
  if (prec < 8) throw std::invalid_argument("ExpPoly::eval_over: precision < 8");
  // Interval Horner on the polynomial part.
  Enclosure acc{Rational(0)};
  const auto& c = poly_.coeffs();
  for (std::size_t i = c.size(); i-- > 0;) acc = acc * t + c[i];
  // e^{-lambda s} is decreasing in s.
  Enclosure ex(enclose_exp_neg(lambda_ * t.hi, prec).lo,
               enclose_exp_neg(lambda_ * t.lo, prec).hi);
  return ex * acc;
}

Rational exp_moment(const ExpPoly& f) {
  Rational total(0);
  Integer kfact(1);
  Rational inv_lambda = 1 / f.lambda();
  Rational pw = inv_lambda;  // lambda^{-(k+1)}
  const auto& c = f.poly().coeffs();
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (k > 0) {
      kfact *= static_cast<unsigned long>(k);
      pw *= inv_lambda;
    }
    total += c[k] * Rational(kfact) * pw;
  }
  return total;
}

RatPoly exp_antiderivative(const Rational& lambda, const RatPoly& q) {
  RatPoly r;
  RatPoly d = q;
  Rational inv = 1 / lambda;
  Rational f = -inv;
  while (!d.is_zero()) {
    r = r + d * f;
    d = d.derivative();
    f *= inv;
  }
  return r;
}

}  // namespace batfun
