#include "batfun/quadrature.hpp"

#include <cmath>
#include <complex>
#include <functional>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace batfun {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

struct Panelizer {
  std::function<double(double)> f;
  long evals = 0;
  double err = 0;

  double eval(double x) {
    ++evals;
    return f(x);
  }

  double simpson(double a, double fa, double m, double fm, double b, double fb) {
    return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  }

  double adapt(double a, double fa, double b, double fb, double m, double fm,
               double whole, double tol, int depth) {
    double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    double flm = eval(lm), frm = eval(rm);
    double left = simpson(a, fa, lm, flm, m, fm);
    double right = simpson(m, fm, rm, frm, b, fb);
    double delta = left + right - whole;
    if (depth <= 0 || std::fabs(delta) <= 15.0 * tol) {
      err += std::fabs(delta) / 15.0;
      return left + right + delta / 15.0;
    }
    return adapt(a, fa, m, fm, lm, flm, left, 0.5 * tol, depth - 1) +
           adapt(m, fm, b, fb, rm, frm, right, 0.5 * tol, depth - 1);
  }

  /// Adaptive Simpson over [a, b] with panels no wider than max_w (so that
  /// an oscillation never hides inside a single starting panel).
  double integrate(double a, double b, double tol, double max_w) {
    long panels = std::max(1L, static_cast<long>(std::ceil((b - a) / max_w)));
    double h = (b - a) / panels, total = 0;
    double x0 = a, f0 = eval(a);
    for (long i = 0; i < panels; ++i) {
      double x1 = a + (i + 1) * h;
      double f1 = eval(x1);
      double m = 0.5 * (x0 + x1), fm = eval(m);
      double whole = simpson(x0, f0, m, fm, x1, f1);
      total += adapt(x0, f0, x1, f1, m, fm, whole, tol / panels, 28);
      x0 = x1;
      f0 = f1;
    }
    return total;
  }
};

}  // namespace

QuadResult bateman_integral(int n, const Rational& t, double tol) {
  if (n < 0 || sgn(t) < 0 || tol <= 0)
    throw std::invalid_argument("bateman_integral: n >= 0, t >= 0, tol > 0 required");
  const double td = t.get_d();
  const double sign = n % 2 ? -1.0 : 1.0;
  QuadResult res;

  if (sgn(t) == 0) {
    // theta form: (2/pi) int_0^{pi/2} cos(2n theta) dtheta, smooth.
    Panelizer p;
    p.f = [n](double th) { return std::cos(2.0 * n * th); };
    double v = p.integrate(0.0, 0.5 * kPi, 0.25 * tol, 0.5 * kPi / (n + 1));
    res.value = sign * (2.0 / kPi) * v;
    res.error_estimate = (2.0 / kPi) * p.err;
    res.evaluations = p.evals;
    return res;
  }

  // Pick U so the oscillatory tail (phase derivative >= t - 2n/(1+U^2))
  // satisfies 2/((1+U^2)(t - 2n/(1+U^2))) * (2/pi) < tol/2.
  double U = std::sqrt(std::max(1.0, 4.0 * n / td));
  auto tail_bound = [&](double u) {
    double dphase = td - 2.0 * n / (1.0 + u * u);
    if (dphase <= 0) return std::numeric_limits<double>::infinity();
    return (2.0 / kPi) * 2.0 / ((1.0 + u * u) * dphase);
  };
  while (tail_bound(U) > 0.5 * tol) U *= 1.5;

  Panelizer p;
  p.f = [n, td](double u) {
    return std::cos(td * u - 2.0 * n * std::atan(u)) / (1.0 + u * u);
  };
  double v = p.integrate(0.0, U, 0.25 * tol * kPi / 2.0, kPi / td);
  res.value = sign * (2.0 / kPi) * v;
  res.error_estimate = (2.0 / kPi) * p.err + tail_bound(U);
  res.evaluations = p.evals;
  return res;
}

QuadResult fourier_integral(int k, const Rational& t, double tol,
                            double truncation) {
  if (k < 1 || sgn(t) <= 0 || tol <= 0)
    throw std::invalid_argument("fourier_integral: k >= 1, t > 0, tol > 0 required");
  const double td = t.get_d();

  // Tail: the integrand modulus is exactly 1/(1+tau^2).
  auto tail_bound = [](double R) { return (2.0 / kPi) * (0.5 * kPi - std::atan(R)); };
  double R = truncation;
  if (R <= 0) {
    R = 4.0 / (kPi * tol);
    while (tail_bound(R) > 0.5 * tol) R *= 1.5;
  } else if (tail_bound(R) > tol) {
    std::ostringstream os;
    os << "fourier_integral: truncation R = " << R << " leaves tail bound "
       << tail_bound(R) << " > tol = " << tol;
    throw std::domain_error(os.str());
  }

  using C = std::complex<double>;
  auto integrand = [k, td](double tau) {
    C num(tau, 1.0), den(tau, -1.0);
    C frac = std::exp(C(0.0, td * tau));
    for (int i = 0; i < k - 1; ++i) frac *= num;
    for (int i = 0; i < k + 1; ++i) frac /= den;
    return frac;
  };

  QuadResult res;
  double panel_tol = 0.25 * tol * kPi / 2.0;
  Panelizer pre, pim;
  pre.f = [&](double x) { return integrand(x).real(); };
  pim.f = [&](double x) { return integrand(x).imag(); };
  double vr = pre.integrate(-R, R, panel_tol, kPi / td);
  double vi = pim.integrate(-R, R, panel_tol, kPi / td);
  res.value = vr / kPi;
  res.imag_residual = std::fabs(vi / kPi);
  res.error_estimate = (pre.err + pim.err) / kPi + tail_bound(R);
  res.evaluations = pre.evals + pim.evals;
  return res;
}

}  // namespace batfun
