#include "batfun/ratpoly.hpp"

#include <cstdlib>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace batfun {

Rational pow_rational(const Rational& base, long exp) {
  if (exp == 0) return Rational(1);
  bool invert = exp < 0;
  unsigned long e = invert ? static_cast<unsigned long>(-exp)
                           : static_cast<unsigned long>(exp);
  Rational r;
  mpz_pow_ui(r.get_num_mpz_t(), base.get_num_mpz_t(), e);
  mpz_pow_ui(r.get_den_mpz_t(), base.get_den_mpz_t(), e);
  if (invert) {
    if (sgn(r) == 0) throw std::domain_error("pow_rational: 0 to negative power");
    r = 1 / r;
  }
  return r;
}

Integer factorial(unsigned long n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

Integer binomial(unsigned long n, unsigned long k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

Rational rational_from_string(const std::string& s) {
  auto dot = s.find('.');
  if (dot == std::string::npos) {
    Rational q(s, 10);
    q.canonicalize();
    return q;
  }
  std::string digits = s.substr(0, dot) + s.substr(dot + 1);
  std::size_t frac_len = s.size() - dot - 1;
  Rational q(digits, 10);
  q.canonicalize();
  Integer den;
  mpz_ui_pow_ui(den.get_mpz_t(), 10, frac_len);
  return make_rational(q.get_num(), den * q.get_den());
}

std::string to_string(const Rational& q) { return q.get_str(); }

RatPoly::RatPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  normalize();
}

RatPoly::RatPoly(const Rational& constant) {
  if (sgn(constant) != 0) coeffs_.push_back(constant);
}

RatPoly RatPoly::monomial(std::size_t power, const Rational& coeff) {
  if (sgn(coeff) == 0) return RatPoly();
  std::vector<Rational> c(power + 1, Rational(0));
  c[power] = coeff;
  RatPoly p;
  p.coeffs_ = std::move(c);
  return p;
}

void RatPoly::normalize() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

const Rational& RatPoly::coeff(std::size_t k) const {
  static const Rational zero(0);
  return k < coeffs_.size() ? coeffs_[k] : zero;
}

const Rational& RatPoly::leading_coeff() const {
  static const Rational zero(0);
  return coeffs_.empty() ? zero : coeffs_.back();
}

RatPoly RatPoly::operator+(const RatPoly& o) const {
  std::vector<Rational> c(std::max(coeffs_.size(), o.coeffs_.size()), Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) c[i] = coeffs_[i];
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) c[i] += o.coeffs_[i];
  return RatPoly(std::move(c));
}

RatPoly RatPoly::operator-(const RatPoly& o) const { return *this + (-o); }

RatPoly RatPoly::operator-() const {
  RatPoly p(*this);
  for (auto& c : p.coeffs_) c = -c;
  return p;
}

RatPoly RatPoly::operator*(const RatPoly& o) const {
  if (is_zero() || o.is_zero()) return RatPoly();
  std::vector<Rational> c(coeffs_.size() + o.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
      c[i + j] += coeffs_[i] * o.coeffs_[j];
  return RatPoly(std::move(c));
}

RatPoly RatPoly::operator*(const Rational& s) const {
  if (sgn(s) == 0) return RatPoly();
  RatPoly p(*this);
  for (auto& c : p.coeffs_) c *= s;
  return p;
}

RatPoly RatPoly::derivative() const {
  if (coeffs_.size() <= 1) return RatPoly();
  std::vector<Rational> c(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) c[i - 1] = coeffs_[i] * Rational(static_cast<long>(i));
  return RatPoly(std::move(c));
}

RatPoly RatPoly::compose_scale(const Rational& c) const {
  std::vector<Rational> out(coeffs_);
  Rational pw(1);
  for (std::size_t i = 1; i < out.size(); ++i) {
    pw *= c;
    out[i] *= pw;
  }
  return RatPoly(std::move(out));
}

RatPoly RatPoly::compose_shift(const Rational& c) const {
  // Horner-style Taylor shift: repeated in-place additions.
  std::vector<Rational> a(coeffs_);
  const std::size_t n = a.size();
  if (n <= 1 || sgn(c) == 0) return RatPoly(std::move(a));
  for (std::size_t i = n - 1; i-- > 0;)
    for (std::size_t j = i; j + 1 < n; ++j) a[j] += c * a[j + 1];
  return RatPoly(std::move(a));
}

Rational RatPoly::eval(const Rational& t) const {
  Rational v(0);
  for (std::size_t i = coeffs_.size(); i-- > 0;) v = v * t + coeffs_[i];
  return v;
}

std::pair<RatPoly, RatPoly> RatPoly::divmod(const RatPoly& divisor) const {
  if (divisor.is_zero()) throw std::domain_error("RatPoly::divmod: division by zero polynomial");
  std::vector<Rational> rem(coeffs_);
  int dq = degree() - divisor.degree();
  if (dq < 0) return {RatPoly(), *this};
  std::vector<Rational> quot(dq + 1, Rational(0));
  const Rational& lead = divisor.leading_coeff();
  for (int i = dq; i >= 0; --i) {
    Rational f = rem[i + divisor.degree()] / lead;
    quot[i] = f;
    if (sgn(f) == 0) continue;
    for (int j = 0; j <= divisor.degree(); ++j)
      rem[i + j] -= f * divisor.coeff(j);
  }
  return {RatPoly(std::move(quot)), RatPoly(std::move(rem))};
}

RatPoly RatPoly::divide_exact(const RatPoly& divisor) const {
  auto [q, r] = divmod(divisor);
  if (!r.is_zero()) throw std::domain_error("RatPoly::divide_exact: nonzero remainder");
  return q;
}

RatPoly RatPoly::shift_down(std::size_t k) const {
  if (is_zero()) return RatPoly();
  if (coeffs_.size() <= k) throw std::domain_error("RatPoly::shift_down: degree too small");
  for (std::size_t i = 0; i < k; ++i)
    if (sgn(coeffs_[i]) != 0) throw std::domain_error("RatPoly::shift_down: not divisible by t^k");
  return RatPoly(std::vector<Rational>(coeffs_.begin() + k, coeffs_.end()));
}

std::vector<Integer> RatPoly::primitive_integer_coeffs() const {
  if (is_zero()) return {};
  Integer den(1);
  for (const auto& c : coeffs_) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  std::vector<Integer> out(coeffs_.size());
  Integer content(0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    out[i] = coeffs_[i].get_num() * (den / coeffs_[i].get_den());
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), out[i].get_mpz_t());
  }
  for (auto& c : out) c /= content;
  return out;
}

std::string RatPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    if (sgn(coeffs_[i]) == 0) continue;
    if (!first) os << (sgn(coeffs_[i]) > 0 ? " + " : " - ");
    else if (sgn(coeffs_[i]) < 0) os << "-";
    first = false;
    Rational a = abs(coeffs_[i]);
    if (i == 0 || a != 1) os << a.get_str();
    if (i > 0) {
      if (a != 1) os << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

RatPoly poly_gcd(RatPoly a, RatPoly b) {
  while (!b.is_zero()) {
    auto [q, r] = a.divmod(b);
    (void)q;
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  return a * (1 / a.leading_coeff());
}

RatPoly squarefree_part(const RatPoly& p) {
  if (p.is_zero() || p.degree() == 0) return p;
  RatPoly g = poly_gcd(p, p.derivative());
  if (g.degree() <= 0) return p;
  return p.divide_exact(g);
}

}  // namespace batfun
