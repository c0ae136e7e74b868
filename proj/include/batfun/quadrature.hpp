#pragma once

#include "batfun/rational.hpp"

namespace batfun {

/// Result of an adaptive quadrature.  The error estimate is the scheme's
/// own heuristic (plus any truncation-tail bound); certification comes
/// from comparing against the exact pipeline, not from this struct.
struct QuadResult {
  double value = 0;
  double error_estimate = 0;
  long evaluations = 0;
  double imag_residual = 0;  // Fourier route only: |Im| of the computed integral
};

/// Bateman's cosine integral
///   F_n(t) = (-1)^n (2/pi) int_0^{pi/2} cos(t tan(theta) - 2n theta) dtheta,
/// evaluated after u = tan(theta) as
///   (-1)^n (2/pi) int_0^inf cos(t u - 2n arctan u) / (1+u^2) du
/// with an explicit oscillatory tail bound (t = 0 is integrated in the
/// theta form, where the integrand is smooth).
QuadResult bateman_integral(int n, const Rational& t, double tol);

/// The Fourier-type representation
///   F_k(t) = (1/pi) int_{-inf}^{inf} e^{i t tau} (tau+i)^{k-1}/(tau-i)^{k+1} dtau
/// truncated to [-R, R]; the tail is bounded by (2/pi)(pi/2 - arctan R).
/// Pass truncation <= 0 to pick R from tol automatically; an explicit R too
/// small for the requested tol is an error.
QuadResult fourier_integral(int k, const Rational& t, double tol,
                            double truncation = 0);

}  // namespace batfun
