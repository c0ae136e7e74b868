#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "batfun/enclosure.hpp"
#include "batfun/ratpoly.hpp"

namespace batfun {

/// Isolates all distinct real roots of p (optionally restricted to a closed
/// rational domain).  Returns pairwise-disjoint enclosures in ascending
/// order, each certified to contain exactly one root; exact rational roots
/// hit by the subdivision come back as point enclosures.  Rejects the zero
/// polynomial.  Repeated roots are collapsed via the squarefree part unless
/// the caller asserts squarefreeness.
std::vector<Enclosure> isolate_real_roots(
    const RatPoly& p,
    std::optional<std::pair<Rational, Rational>> domain = std::nullopt,
    bool assume_squarefree = false);

/// Enclosure of the largest real root only (cheaper than full isolation
/// for high degrees); nullopt when p has no real root.
std::optional<Enclosure> largest_real_root(const RatPoly& p,
                                           bool assume_squarefree = false);

/// Shrinks a root enclosure produced by the isolators to the requested
/// width by exact sign bisection.  p must have exactly one simple root
/// strictly inside the enclosure (endpoints may be other simple roots).
void refine_root(const RatPoly& p, Enclosure& e, const Rational& width);

int sign_at(const RatPoly& p, const Rational& t);

/// Number of sign variations in the coefficient sequence of p(t) --
/// a Descartes upper bound on the count of positive real roots, exact
/// when it is 0 or 1.
int descartes_variations(const RatPoly& p);

}  // namespace batfun
