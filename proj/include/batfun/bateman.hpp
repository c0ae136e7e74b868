#pragma once

#include <string>
#include <vector>

#include "batfun/enclosure.hpp"
#include "batfun/exppoly.hpp"
#include "batfun/ratpoly.hpp"

namespace batfun {

/// Append-only memoized table of the Bateman polynomial parts p_n,
/// F_n(t) = e^{-t} p_n(t), built by the three-term recurrence
/// (n+1) F_{n+1} = (2n - 2t) F_n - (n-1) F_{n-1}.
class BatemanTable {
 public:
  BatemanTable();

  void extend(int n);
  int max_n() const { return static_cast<int>(p_.size()) - 1; }

  const RatPoly& poly(int n);
  ExpPoly fn(int n);

  /// F_n' as e^{-t}(p_n' - p_n).
  ExpPoly fn_derivative(int n);

  /// H_n(t) = (-1)^n F_n(n t) = e^{-n t} (-1)^n p_n(n t).
  ExpPoly h_fn(int n);

 private:
  std::vector<RatPoly> p_;
};

enum class Method {
  Explicit,
  Hypergeometric,
  LaguerreDiff,
  LaguerreAlpha1,
  Rodriguez,
  Residue,
  GenFunc,
};

Method method_from_string(const std::string& name);
std::string method_name(Method m);
std::vector<Method> all_methods();

/// Independent construction of p_n along the named route.
RatPoly bateman_poly_alt(int n, Method method);

/// Generalized Laguerre polynomial L_n^{(alpha)}(x) by the three-term
/// recurrence (integer alpha, possibly negative).
RatPoly laguerre_poly(int n, long alpha);

/// L_n^{(alpha)} recovered from the Rodriguez formula
/// x^alpha e^{-x} L_n^{(alpha)}(x) = (1/n!) d^n/dx^n (e^{-x} x^{n+alpha});
/// requires n + alpha >= 0.
RatPoly laguerre_rodriguez(int n, long alpha);

/// F_n^{(alpha)}(t) = e^{-t} L_n^{(alpha)}(2t).
ExpPoly falpha(int n, long alpha);

/// F_n' via the Laguerre route -e^{-t}(L_n(2t) + L_{n-1}(2t)); agrees
/// exactly with BatemanTable::fn_derivative.
ExpPoly bateman_derivative(int n);

struct IdentityReport {
  std::string id;
  int n;
  long alpha;  // 0 when not applicable
  bool pass;
  std::string detail;
};

/// Exact residual checks of the full identity battery for one (n, alpha).
std::vector<IdentityReport> identity_suite(BatemanTable& table, int n, long alpha);

/// Exact integral of F_n F_m over [0, inf).
Rational inner_product(BatemanTable& table, int n, int m);

/// Exact integral of (F_n(t)/t)^2 over [0, inf); equals 2/n.
Rational weighted_norm(BatemanTable& table, int n);

/// Bundle of the exact integral facts for a pair (n, m): the norm
/// int F_n^2 = 1, the cross term int F_n F_m, the weighted norm
/// int (F_n/t)^2 = 2/n, and the Laplace transform of F_n at z = 1 from
/// both the moment integral and the closed form.
struct ExactIntegrals {
  Rational norm;
  Rational cross;
  Rational weighted;
  Rational laplace_at_1;
  Rational laplace_closed_at_1;
};

ExactIntegrals exact_integrals(BatemanTable& table, int n, int m);

/// Exact Laplace transform value int_0^inf e^{-z t} F_k(t) dt for
/// rational z > -1, via exponential moments with shifted decay.
Rational laplace_exact(BatemanTable& table, int k, const Rational& z);

/// Closed form -2/(1+z)^2 ((z-1)/(z+1))^{k-1}.
Rational laplace_closed_form(int k, const Rational& z);

/// Enclosure of the Parseval partial sum sum_{k=0}^{K} F_k^2(t).
Enclosure parseval_partial(const Rational& t, int K, int prec);

/// Exact polynomial-part values p_k(t) for k = 0..K at fixed rational t
/// (value-level recurrence; cheap for large K).
std::vector<Rational> bateman_poly_values(const Rational& t, int K);

}  // namespace batfun
