#include "batfun/bateman.hpp"

#include <stdexcept>

#include "batfun/series.hpp"

namespace batfun {

namespace {

const RatPoly kMinus2T = RatPoly::monomial(1, Rational(-2));
const RatPoly kT = RatPoly::monomial(1, Rational(1));

RatPoly lin(const Rational& c0, const Rational& c1) {
  return RatPoly(std::vector<Rational>{c0, c1});
}

RatPoly quad(const Rational& c0, const Rational& c1, const Rational& c2) {
  return RatPoly(std::vector<Rational>{c0, c1, c2});
}

/// Gaussian rational a + b*i, used to expand the residue representation.
struct GaussRational {
  Rational re{0}, im{0};

  GaussRational operator*(const GaussRational& o) const {
    return {re * o.re - im * o.im, re * o.im + im * o.re};
  }
  GaussRational operator*(const Rational& s) const { return {re * s, im * s}; }
  GaussRational operator+(const GaussRational& o) const { return {re + o.re, im + o.im}; }
};

GaussRational gauss_pow(GaussRational b, unsigned long e) {
  GaussRational r{Rational(1), Rational(0)};
  while (e) {
    if (e & 1) r = r * b;
    b = b * b;
    e >>= 1;
  }
  return r;
}

}  // namespace

BatemanTable::BatemanTable() {
  p_.push_back(RatPoly(Rational(1)));  // p_0 = 1
  p_.push_back(kMinus2T);              // p_1 = -2t
}

void BatemanTable::extend(int n) {
  while (max_n() < n) {
    long k = max_n();  // building p_{k+1}
    RatPoly factor = lin(Rational(2 * k), Rational(-2));
    RatPoly next = (factor * p_[k] - p_[k - 1] * Rational(k - 1)) *
                   make_rational(1, k + 1);
    p_.push_back(std::move(next));
  }
}

const RatPoly& BatemanTable::poly(int n) {
  if (n < 0) throw std::invalid_argument("BatemanTable: negative index");
  extend(n);
  return p_[n];
}

ExpPoly BatemanTable::fn(int n) { return ExpPoly(Rational(1), poly(n)); }

ExpPoly BatemanTable::fn_derivative(int n) { return fn(n).derivative(); }

ExpPoly BatemanTable::h_fn(int n) {
  if (n < 1) throw std::invalid_argument("h_fn: n >= 1 required");
  RatPoly q = poly(n).compose_scale(Rational(n));
  if (n % 2) q = -q;
  return ExpPoly(Rational(n), q);
}

Method method_from_string(const std::string& name) {
  if (name == "explicit") return Method::Explicit;
  if (name == "hypergeometric") return Method::Hypergeometric;
  if (name == "laguerre_diff") return Method::LaguerreDiff;
  if (name == "laguerre_alpha1") return Method::LaguerreAlpha1;
  if (name == "rodriguez") return Method::Rodriguez;
  if (name == "residue") return Method::Residue;
  if (name == "genfunc") return Method::GenFunc;
  throw std::invalid_argument("unknown construction method: " + name);
}

std::string method_name(Method m) {
  switch (m) {
    case Method::Explicit: return "explicit";
    case Method::Hypergeometric: return "hypergeometric";
    case Method::LaguerreDiff: return "laguerre_diff";
    case Method::LaguerreAlpha1: return "laguerre_alpha1";
    case Method::Rodriguez: return "rodriguez";
    case Method::Residue: return "residue";
    case Method::GenFunc: return "genfunc";
  }
  throw std::logic_error("unreachable");
}

std::vector<Method> all_methods() {
  return {Method::Explicit,  Method::Hypergeometric, Method::LaguerreDiff,
          Method::LaguerreAlpha1, Method::Rodriguez, Method::Residue,
          Method::GenFunc};
}

RatPoly laguerre_poly(int n, long alpha) {
  if (n < 0) throw std::invalid_argument("laguerre_poly: n >= 0 required");
  RatPoly prev(Rational(1));
  if (n == 0) return prev;
  RatPoly cur = lin(Rational(1 + alpha), Rational(-1));  // 1 + alpha - x
  for (long k = 1; k < n; ++k) {
    // (k+1) L_{k+1} = (2k+1+alpha-x) L_k - (k+alpha) L_{k-1}
    RatPoly f = lin(Rational(2 * k + 1 + alpha), Rational(-1));
    RatPoly next = (f * cur - prev * Rational(k + alpha)) * make_rational(1, k + 1);
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

RatPoly laguerre_rodriguez(int n, long alpha) {
  if (n < 0 || n + alpha < 0)
    throw std::invalid_argument("laguerre_rodriguez: requires n >= 0 and n + alpha >= 0");
  ExpPoly g(Rational(1), RatPoly::monomial(static_cast<std::size_t>(n + alpha), Rational(1)));
  for (int i = 0; i < n; ++i) g = g.derivative();
  RatPoly q = g.poly() * make_rational(Integer(1), factorial(n));
  if (alpha >= 0) return q.shift_down(static_cast<std::size_t>(alpha));
  return q * RatPoly::monomial(static_cast<std::size_t>(-alpha), Rational(1));
}

ExpPoly falpha(int n, long alpha) {
  return ExpPoly(Rational(1), laguerre_poly(n, alpha).compose_scale(Rational(2)));
}

ExpPoly bateman_derivative(int n) {
  if (n < 1) throw std::invalid_argument("bateman_derivative: n >= 1 required");
  RatPoly sum = laguerre_poly(n, 0).compose_scale(Rational(2)) +
                laguerre_poly(n - 1, 0).compose_scale(Rational(2));
  return ExpPoly(Rational(1), -sum);
}

RatPoly bateman_poly_alt(int n, Method method) {
  switch (method) {
    case Method::Explicit: {
      if (n < 1) throw std::invalid_argument("explicit: n >= 1 required");
      // coeff of t^k: (-2)^k C(n,k) / (n (k-1)!)
      std::vector<Rational> c(n + 1, Rational(0));
      Rational pw(1);
      for (int k = 1; k <= n; ++k) {
        pw *= -2;
        c[k] = pw * Rational(binomial(n, k)) /
               (Rational(n) * Rational(factorial(k - 1)));
      }
      return RatPoly(std::move(c));
    }
    case Method::Hypergeometric: {
      if (n < 1) throw std::invalid_argument("hypergeometric: n >= 1 required");
      // -2t * 1F1(1-n; 2; 2t), a terminating series.
      std::vector<Rational> series(n, Rational(0));
      Rational term(1);
      series[0] = term;
      for (int j = 1; j < n; ++j) {
        term *= Rational(2 * (1 - n + (j - 1))) / Rational((2 + (j - 1)) * j);
        series[j] = term;
      }
      return RatPoly(std::move(series)) * kMinus2T;
    }
    case Method::LaguerreDiff: {
      if (n < 0) throw std::invalid_argument("laguerre_diff: n >= 0 required");
      RatPoly ln = laguerre_poly(n, 0).compose_scale(Rational(2));
      if (n == 0) return ln;
      return ln - laguerre_poly(n - 1, 0).compose_scale(Rational(2));
    }
    case Method::LaguerreAlpha1: {
      if (n < 1) throw std::invalid_argument("laguerre_alpha1: n >= 1 required");
      RatPoly l1 = laguerre_poly(n - 1, 1).compose_scale(Rational(2));
      return l1 * RatPoly::monomial(1, make_rational(-2, n));
    }
    case Method::Rodriguez: {
      if (n < 1) throw std::invalid_argument("rodriguez: n >= 1 required");
      // F_n = (t e^t / n!) d^n/dt^n (e^{-2t} t^{n-1}); the n-th derivative
      // is e^{-2t} q(t) in the ExpPoly ring.
      ExpPoly g(Rational(2), RatPoly::monomial(n - 1, Rational(1)));
      for (int i = 0; i < n; ++i) g = g.derivative();
      return kT * g.poly() * make_rational(Integer(1), factorial(n));
    }
    case Method::Residue: {
      if (n < 1) throw std::invalid_argument("residue: n >= 1 required");
      // F_n(t) = 2i/n! * d^n/dz^n [e^{itz} (z+i)^{n-1}]_{z=i}, by Leibniz:
      // derivative order j on the exponential contributes (it)^j e^{-t};
      // order n-j on (z+i)^{n-1} contributes (n-1)!/(j-1)! (2i)^{j-1}.
      const GaussRational two_i{Rational(0), Rational(2)};
      const GaussRational unit_i{Rational(0), Rational(1)};
      std::vector<Rational> c(n + 1, Rational(0));
      for (int j = 1; j <= n; ++j) {
        GaussRational term = two_i * gauss_pow(unit_i, j) * gauss_pow(two_i, j - 1);
        term = term * (Rational(binomial(n, j)) * Rational(factorial(n - 1)) /
                       (Rational(factorial(n)) * Rational(factorial(j - 1))));
        if (sgn(term.im) != 0)
          throw std::logic_error("residue expansion: nonreal coefficient");
        c[j] = term.re;
      }
      return RatPoly(std::move(c));
    }
    case Method::GenFunc: {
      if (n < 0) throw std::invalid_argument("genfunc: n >= 0 required");
      // e^{-t(1+z)/(1-z)} = e^{-t} exp(-2t(z + z^2 + ...)).
      PolySeries s;
      s.coeffs.assign(n + 1, RatPoly());
      for (int k = 1; k <= n; ++k) s.coeffs[k] = kMinus2T;
      return series_exp(s, n).coeff(n);
    }
  }
  throw std::logic_error("unreachable");
}

std::vector<IdentityReport> identity_suite(BatemanTable& table, int n, long alpha) {
  if (n < 1) throw std::invalid_argument("identity_suite: n >= 1 required");
  std::vector<IdentityReport> out;
  auto report = [&](const std::string& id, bool pass, const std::string& detail = "") {
    out.push_back({id, n, alpha, pass, detail});
  };

  table.extend(n + 1);  // later references into the table must stay valid
  const RatPoly& p = table.poly(n);
  RatPoly dp = p.derivative();
  RatPoly u = dp - p;          // F_n' polynomial part
  RatPoly du = u.derivative();
  RatPoly w = du - u;          // F_n'' polynomial part

  // (a) t F'' = (t - 2n) F
  report("a:ode", (kT * w - lin(Rational(-2 * n), Rational(1)) * p).is_zero());

  // (b) initial values
  report("b:init", sgn(p.coeff(0)) == 0 && u.eval(Rational(0)) == -2);

  // (c) difference equation
  {
    const RatPoly& pm = table.poly(n - 1);
    const RatPoly& pp = table.poly(n + 1);
    RatPoly res = (p - pm) * Rational(n - 1) + (p - pp) * Rational(n + 1) -
                  kT * p * Rational(2);
    report("c:difference", res.is_zero());
  }

  // (d) (n+1) F_{n+1} - (n-1) F_{n-1} = 2t F_n'
  {
    RatPoly res = table.poly(n + 1) * Rational(n + 1) -
                  table.poly(n - 1) * Rational(n - 1) - kT * u * Rational(2);
    report("d:diff-differential", res.is_zero());
  }

  // (e) F_n' - F_{n+1}' = F_n + F_{n+1}
  {
    const RatPoly& pp = table.poly(n + 1);
    RatPoly up = pp.derivative() - pp;
    report("e:system", (u - up - (p + pp)).is_zero());
  }

  // (f) Laguerre connections (12), (13)
  {
    bool ok12 = p == laguerre_poly(n, -1).compose_scale(Rational(2));
    bool ok13 = p == bateman_poly_alt(n, Method::LaguerreAlpha1);
    report("f:laguerre", ok12 && ok13);
  }

  // (g) alpha ladder (35) and derivative ladder (36)
  {
    RatPoly la = laguerre_poly(n, alpha).compose_scale(Rational(2));
    RatPoly la1 = laguerre_poly(n, alpha + 1).compose_scale(Rational(2));
    RatPoly la1m = laguerre_poly(n - 1, alpha + 1).compose_scale(Rational(2));
    bool ok35 = (la - (la1 - la1m)).is_zero();
    ExpPoly fa = falpha(n, alpha);
    RatPoly dres = fa.derivative().poly() + (la1 + la1m);
    report("g:ladders", ok35 && dres.is_zero());
  }

  // (h) F^(alpha) ODE
  {
    RatPoly g = laguerre_poly(n, alpha).compose_scale(Rational(2));
    RatPoly g1 = g.derivative() - g;
    RatPoly g2 = g1.derivative() - g1;
    RatPoly res = lin(Rational(1 + alpha + 2 * n), Rational(-1)) * g +
                  g1 * Rational(1 + alpha) + kT * g2;
    report("h:falpha-ode", res.is_zero());
  }

  // (i) F^(alpha) recurrence in n (printed with "(check!)" in the source);
  // verified verbatim, with sign variants probed on failure.
  if (n >= 2) {
    auto lag2t = [&](int m) { return laguerre_poly(m, alpha).compose_scale(Rational(2)); };
    RatPoly g0 = lag2t(n - 2), g1 = lag2t(n - 1), g2 = lag2t(n);
    RatPoly mid = lin(Rational(1 - alpha - 2 * n), Rational(2));
    RatPoly res = g0 * Rational(n - 1 + alpha) + mid * g1 + g2 * Rational(n);
    if (res.is_zero()) {
      report("i:falpha-recurrence", true, "verbatim form holds");
    } else {
      std::string which = "verbatim form fails;";
      for (int s0 : {1, -1})
        for (int s1 : {1, -1})
          for (int s2 : {1, -1}) {
            RatPoly v = g0 * Rational(s0 * (n - 1 + alpha)) +
                        mid * g1 * Rational(s1) + g2 * Rational(s2 * n);
            if (v.is_zero())
              which += " variant (" + std::to_string(s0) + "," +
                       std::to_string(s1) + "," + std::to_string(s2) + ") holds;";
          }
      report("i:falpha-recurrence", false, which);
    }
  }

  // (j) derivative ODE applied to F = F_n'
  {
    // (-4n^2 + 4nt - t^2) G - 2n G' + (t^2 - 2nt) G'' = 0 for G = F_n',
    // with G = e^{-t} u.
    RatPoly a = quad(Rational(-4) * Rational(n) * Rational(n), Rational(4 * n), Rational(-1));
    RatPoly ccoef = quad(Rational(0), Rational(-2 * n), Rational(1));
    RatPoly f1 = u.derivative() - u;
    RatPoly f2 = f1.derivative() - f1;
    RatPoly res = a * u - f1 * Rational(2 * n) + ccoef * f2;
    report("j:derivative-ode", res.is_zero());
  }

  // (k) H_n ODE: t H'' = n^2 (t-2) H
  {
    ExpPoly h = table.h_fn(n);
    RatPoly h2 = h.derivative().derivative().poly();
    RatPoly res = kT * h2 - lin(Rational(-2), Rational(1)) * h.poly() *
                                Rational(n) * Rational(n);
    report("k:h-ode", res.is_zero());
  }

  // (l) energy identity (24), split into the e^{-2t} part and the constant.
  {
    RatPoly pt = p.shift_down(1);            // p / t
    RatPoly q = pt * pt;                     // (F_n/t)^2 = e^{-2t} q
    RatPoly r = exp_antiderivative(Rational(2), q);
    RatPoly bracket = u * u - p * p + kT * pt * pt * Rational(2 * n) + r * Rational(2 * n);
    bool const_ok = Rational(n) * r.eval(Rational(0)) == -2;
    report("l:energy", bracket.is_zero() && const_ok);
  }

  return out;
}

Rational inner_product(BatemanTable& table, int n, int m) {
  if (n < 1 || m < 1) throw std::invalid_argument("inner_product: n, m >= 1 required");
  return exp_moment(ExpPoly(Rational(2), table.poly(n) * table.poly(m)));
}

Rational weighted_norm(BatemanTable& table, int n) {
  if (n < 1) throw std::invalid_argument("weighted_norm: n >= 1 required");
  RatPoly pt = table.poly(n).shift_down(1);
  return exp_moment(ExpPoly(Rational(2), pt * pt));
}

ExactIntegrals exact_integrals(BatemanTable& table, int n, int m) {
  ExactIntegrals r;
  r.norm = inner_product(table, n, n);
  r.cross = inner_product(table, n, m);
  r.weighted = weighted_norm(table, n);
  r.laplace_at_1 = laplace_exact(table, n, Rational(1));
  r.laplace_closed_at_1 = laplace_closed_form(n, Rational(1));
  return r;
}

Rational laplace_exact(BatemanTable& table, int k, const Rational& z) {
  if (z <= -1) throw std::invalid_argument("laplace_exact: z > -1 required");
  return exp_moment(ExpPoly(z + 1, table.poly(k)));
}

Rational laplace_closed_form(int k, const Rational& z) {
  if (k < 1) throw std::invalid_argument("laplace_closed_form: k >= 1 required");
  Rational base = (z - 1) / (z + 1);
  return Rational(-2) / ((1 + z) * (1 + z)) * pow_rational(base, k - 1);
}

std::vector<Rational> bateman_poly_values(const Rational& t, int K) {
  std::vector<Rational> v;
  v.reserve(K + 1);
  v.emplace_back(1);
  if (K >= 1) v.emplace_back(Rational(-2) * t);
  for (int k = 1; k < K; ++k) {
    Rational next = ((Rational(2 * k) - 2 * t) * v[k] - Rational(k - 1) * v[k - 1]) /
                    Rational(k + 1);
    v.push_back(std::move(next));
  }
  return v;
}

Enclosure parseval_partial(const Rational& t, int K, int prec) {
  if (sgn(t) <= 0 || K < 0)
    throw std::invalid_argument("parseval_partial: t > 0 and K >= 0 required");
  auto v = bateman_poly_values(t, K);
  Rational q(0);
  for (const auto& x : v) q += x * x;
  return enclose_exp_neg(2 * t, prec) * q;
}

}  // namespace batfun
