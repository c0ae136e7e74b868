#include "batfun/series.hpp"

#include <stdexcept>

namespace batfun {

const RatPoly& PolySeries::coeff(std::size_t k) const {
  static const RatPoly zero;
  return k < coeffs.size() ? coeffs[k] : zero;
}

PolySeries series_exp(const PolySeries& s, std::size_t order) {
  if (!s.coeff(0).is_zero())
    throw std::invalid_argument("series_exp: nonzero constant term");
  PolySeries e;
  e.coeffs.assign(order + 1, RatPoly());
  e.coeffs[0] = RatPoly(Rational(1));
  // From E' = s' E: k E_k = sum_{j=1}^{k} j s_j E_{k-j}.
  for (std::size_t k = 1; k <= order; ++k) {
    RatPoly acc;
    for (std::size_t j = 1; j <= k; ++j)
      acc = acc + s.coeff(j) * e.coeffs[k - j] * Rational(static_cast<long>(j));
    e.coeffs[k] = acc * make_rational(1, static_cast<long>(k));
  }
  return e;
}

PolySeries series_mul(const PolySeries& a, const PolySeries& b, std::size_t order) {
  PolySeries c;
  c.coeffs.assign(order + 1, RatPoly());
  for (std::size_t i = 0; i <= order && i < a.coeffs.size(); ++i) {
    if (a.coeffs[i].is_zero()) continue;
    for (std::size_t j = 0; i + j <= order && j < b.coeffs.size(); ++j)
      c.coeffs[i + j] = c.coeffs[i + j] + a.coeffs[i] * b.coeffs[j];
  }
  return c;
}

}  // namespace batfun
