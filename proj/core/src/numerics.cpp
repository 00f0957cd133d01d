#include "risemf/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "internal/gk.hpp"
#include "risemf/errors.hpp"

namespace risemf {

double integrate(const std::function<double(double)>& f, double a, double b,
                 const QuadratureSpec& spec) {
  double err = 0;
  bool ok = true;
  double v = internal::adaptive_gk<double>(f, a, b, spec.rel_tol, spec.abs_tol,
                                           spec.max_subdivisions, &err, &ok);
  if (!ok)
    throw NumericalError("integrate: tolerance not reached", v, err);
  return v;
}

double integrate_semi_infinite(const std::function<double(double)>& f,
                               double a, const QuadratureSpec& spec) {
  double h = spec.initial_width > 0 ? spec.initial_width
                                    : std::max(1.0, 0.5 * std::fabs(a));
  const double growth = spec.growth > 1.0 ? spec.growth : 2.0;
  double acc = 0;
  double x = a;
  int small_streak = 0;
  for (int panel = 0; panel < spec.max_subdivisions; ++panel) {
    double err = 0;
    bool ok = true;
    double part = internal::adaptive_gk<double>(
        f, x, x + h, spec.rel_tol, spec.abs_tol * 0.25,
        spec.max_subdivisions, &err, &ok);
    acc += part;
    x += h;
    h *= growth;
    double tol = std::max(spec.abs_tol, spec.rel_tol * std::fabs(acc));
    if (std::fabs(part) < 0.5 * tol) {
      if (++small_streak >= 2) return acc;
    } else {
      small_streak = 0;
    }
  }
  throw NumericalError("integrate_semi_infinite: tail did not converge", acc,
                       std::numeric_limits<double>::quiet_NaN());
}

double integrate_oscillatory(const std::function<double(double)>& f,
                             double osc_scale, const QuadratureSpec& spec) {
  const double x_min = 1e-8;
  const double scale = std::max(osc_scale, 1e-300);
  double acc = 0;
  double lo = x_min;
  int small_streak = 0;
  const int max_decades = 40;
  for (int dec = 0; dec < max_decades; ++dec) {
    double hi = lo * 10;
    // bound the phase increment per sub-panel so GL-16 stays accurate
    int parts = static_cast<int>(std::ceil(scale * (hi - lo) / 1.5));
    parts = std::clamp(parts, 4, 4096);
    double contrib = 0;
    double w = (hi - lo) / parts;
    for (int i = 0; i < parts; ++i)
      contrib += internal::gl16<double>(f, lo + i * w, lo + (i + 1) * w);
    acc += contrib;
    lo = hi;
    if (std::fabs(contrib) < spec.abs_tol && scale * hi > 50) {
      if (++small_streak >= 2) return acc;
    } else {
      small_streak = 0;
    }
  }
  // Decay is slow but the remaining tail alternates; accept what we have if
  // the last decades were already small relative to the requested tolerance.
  throw NumericalError("integrate_oscillatory: tail did not converge", acc,
                       std::numeric_limits<double>::quiet_NaN());
}

double gil_pelaez_cdf(const std::function<std::complex<double>(double)>& L,
                      double omega, const QuadratureSpec& spec,
                      double mean_hint) {
  if (omega <= 0) return 0.0;
  double mean = mean_hint;
  if (mean < 0) {
    // probe E[W] from the transform's slope at the origin
    const double x0 = 1e-8;
    double m = L(x0).imag() / x0;
    mean = (std::isfinite(m) && m > 0) ? m : 0.0;
  }
  auto integrand = [&](double x) {
    std::complex<double> v =
        std::exp(std::complex<double>(0.0, -x * omega)) * L(x);
    return v.imag() / (M_PI * x);
  };
  double integral = integrate_oscillatory(integrand, omega + mean, spec);
  return std::clamp(0.5 - integral, 0.0, 1.0);
}

double invert_monotone(const std::function<double(double)>& F, double target,
                       double lo, double hi, double tol) {
  if (!(lo < hi)) throw DomainError("invert_monotone: empty bracket");
  double flo = F(lo), fhi = F(hi);
  if (flo >= target) return lo;  // already compliant at the lower end
  if (fhi < target)
    throw BracketError("invert_monotone: bracket does not straddle target",
                       flo, fhi);
  while (hi - lo > tol) {
    double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (F(mid) >= target)
      hi = mid;
    else
      lo = mid;
  }
  return hi;
}

double gamma_ratio_lower(int m, double x) {
  if (m < 1) throw DomainError("gamma_ratio_lower: m must be >= 1");
  if (x <= 0) return 0.0;
  double term = std::exp(-x);
  double sum = 0;
  for (int k = 0; k < m; ++k) {
    sum += term;
    term *= x / (k + 1);
  }
  return std::clamp(1.0 - sum, 0.0, 1.0);
}

double gamma_ratio_lower_inv(int m, double p) {
  if (p < 0 || p >= 1) throw DomainError("gamma_ratio_lower_inv: p in [0,1)");
  if (p == 0) return 0.0;
  double hi = static_cast<double>(m);
  while (gamma_ratio_lower(m, hi) < p) hi *= 2;
  return invert_monotone([m](double x) { return gamma_ratio_lower(m, x); }, p,
                         0.0, hi, 1e-12 * hi);
}

double expint_En(double n, double x) {
  if (x <= 0) throw DomainError("expint_En: x must be > 0");
  if (n < 1) throw DomainError("expint_En: n must be >= 1");
  // E_n(x) = e^{-x} int_0^inf e^{-xu} (1+u)^{-n} du
  QuadratureSpec s;
  s.rel_tol = 1e-10;
  s.abs_tol = 1e-16;
  s.initial_width = std::min(1.0, 1.0 / x);
  double body = integrate_semi_infinite(
      [n, x](double u) { return std::exp(-x * u) * std::pow(1.0 + u, -n); },
      0.0, s);
  return std::exp(-x) * body;
}

}  // namespace risemf
