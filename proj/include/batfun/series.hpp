#pragma once

#include <vector>

#include "batfun/ratpoly.hpp"

namespace batfun {

/// Truncated power series in z whose coefficients are rational polynomials
/// in t: s(z) = sum_k coeff[k](t) z^k, stored up to a fixed order.
struct PolySeries {
  std::vector<RatPoly> coeffs;  // index = power of z

  std::size_t order() const { return coeffs.empty() ? 0 : coeffs.size() - 1; }
  const RatPoly& coeff(std::size_t k) const;
};

/// exp(s) truncated at z^order; requires s to have zero constant term.
PolySeries series_exp(const PolySeries& s, std::size_t order);

/// Termwise product truncated at z^order.
PolySeries series_mul(const PolySeries& a, const PolySeries& b, std::size_t order);

}  // namespace batfun
