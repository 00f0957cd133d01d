#pragma once

#include <complex>
#include <functional>

namespace risemf {

struct QuadratureSpec {
  double rel_tol = 1e-6;
  double abs_tol = 1e-9;
  int max_subdivisions = 4000;
  // Truncation policy for semi-infinite domains: panels of geometrically
  // growing width, starting at initial_width (0 = pick from |a|).
  double initial_width = 0;
  double growth = 2.0;

  static QuadratureSpec inner() { return {}; }
  static QuadratureSpec outer() {
    QuadratureSpec s;
    s.rel_tol = 1e-4;
    s.abs_tol = 1e-7;
    return s;
  }
};

// Integral of f over [a, inf).  f must decay eventually; panels grow
// geometrically and the tail is truncated once consecutive panel
// contributions fall below tolerance.
double integrate_semi_infinite(const std::function<double(double)>& f,
                               double a, const QuadratureSpec& spec = {});

// Integral of f over [a, b] (adaptive Gauss-Kronrod).
double integrate(const std::function<double(double)>& f, double a, double b,
                 const QuadratureSpec& spec = {});

// Integral over (0, inf) of a bounded oscillatory integrand whose phase grows
// like osc_scale * x.  Panels are split so each sub-panel spans a bounded
// phase increment; used by the Gil-Pelaez path.
double integrate_oscillatory(const std::function<double(double)>& f,
                             double osc_scale,
                             const QuadratureSpec& spec = {});

// CDF of a non-negative random variable from its Laplace transform evaluated
// on the imaginary axis: L(x) must return L(-jx) for x > 0.
//   F(omega) = 1/2 - (1/pi) int_0^inf Im[e^{-jx omega} L(-jx)]/x dx
// mean_hint, when >= 0, sets the oscillation scale together with omega;
// otherwise the mean is probed from L near x = 0.
double gil_pelaez_cdf(const std::function<std::complex<double>(double)>& L,
                      double omega, const QuadratureSpec& spec = {},
                      double mean_hint = -1.0);

// Smallest x in [lo, hi] with F(x) >= target, for non-decreasing F, located
// by bisection to within tol.
double invert_monotone(const std::function<double(double)>& F, double target,
                       double lo, double hi, double tol);

// Regularized lower incomplete gamma at integer shape:
//   P(m, x) = 1 - e^{-x} sum_{k<m} x^k / k!
double gamma_ratio_lower(int m, double x);
double gamma_ratio_lower_inv(int m, double p);

// Generalized exponential integral E_n(x) = int_1^inf e^{-xt} t^{-n} dt,
// real order n >= 1, x > 0.
double expint_En(double n, double x);

}  // namespace risemf
