#include "risemf/channel.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>

#include "internal/gk.hpp"
#include "risemf/errors.hpp"

namespace risemf {

double ula_gain(double delta, int N_b) {
  // periodic-even fold: G depends on delta mod 1, symmetric
  double u = delta - std::round(delta);
  double s = std::sin(M_PI * u);
  if (std::fabs(u) < 1e-9) return static_cast<double>(N_b);
  double sn = std::sin(M_PI * N_b * u);
  return (sn * sn) / (N_b * s * s);
}

double discrete_gain(double delta, int N_b, double delta_comp) {
  double d = std::fabs(delta);
  if (d > 0.5) d = 1.0 - d;  // G_B(d) = G_B(|d -+ 1|)
  const int n_tilde = N_b / 2 - 1;
  if (d * N_b <= 1.0)
    return 0.5 * delta_comp * N_b;  // main lobe
  int n = static_cast<int>(std::ceil(d * N_b)) - 1;
  if (n > n_tilde) return 0.0;
  double arg = (2.0 * n + 1.0) / (2.0 * N_b);
  return 0.5 * delta_comp * ula_gain(arg, N_b);
}

double los_probability(double t, double beta) {
  if (t < 0) throw DomainError("los_probability: t must be >= 0");
  return std::exp(-beta * t);
}

double pathloss(double t, double alpha, double zeta) {
  if (t <= 0) throw DomainError("pathloss: t must be > 0");
  return zeta * std::pow(t, -alpha);
}

double nakagami_cdf(double h, int m) {
  if (h <= 0) return 0.0;
  // regularized lower incomplete gamma at integer shape
  double x = m * h;
  double term = std::exp(-x);
  double sum = 0;
  for (int k = 0; k < m; ++k) {
    sum += term;
    term *= x / (k + 1);
  }
  return std::clamp(1.0 - sum, 0.0, 1.0);
}

double nakagami_pdf(double h, int m) {
  if (h <= 0) return 0.0;
  double lg = std::lgamma(m);
  return std::exp(m * std::log(static_cast<double>(m)) +
                  (m - 1) * std::log(h) - m * h - lg);
}

namespace {

// CDF of one alignment deviation Phi = (1/2)cos(U), U uniform: arcsine law
// on [-1/2, 1/2].
double phi_cdf(double z) {
  if (z <= -0.5) return 0.0;
  if (z >= 0.5) return 1.0;
  return 0.5 + std::asin(2.0 * z) / M_PI;
}

// P(a < Delta <= b) for Delta = Phi1 - Phi2.  The substitution
// phi2 = (1/2) sin(u) removes the arcsine endpoint singularities.
double delta_interval_prob(double a, double b) {
  if (b <= a) return 0.0;
  auto f = [a, b](double u) {
    double x = 0.5 * std::sin(u);
    return phi_cdf(b + x) - phi_cdf(a + x);
  };
  double err = 0;
  bool ok = true;
  double v = internal::adaptive_gk<double>(f, -M_PI / 2, M_PI / 2, 1e-11,
                                           1e-13, 4000, &err, &ok);
  if (!ok)
    throw NumericalError("beam_gain_pmf: interval quadrature failed", v, err);
  return v / M_PI;
}

BeamGainPMF compute_pmf(int N_b, double delta_comp) {
  BeamGainPMF pmf;
  const int n_tilde = N_b / 2 - 1;
  double total = 0;
  for (int n = 0; n <= n_tilde; ++n) {
    double lo = static_cast<double>(n) / N_b;
    double hi = static_cast<double>(n + 1) / N_b;
    double p = delta_interval_prob(lo, hi) + delta_interval_prob(-hi, -lo) +
               delta_interval_prob(1 - hi, 1 - lo) +
               delta_interval_prob(lo - 1, hi - 1);
    double g = (n == 0) ? 0.5 * delta_comp * N_b
                        : 0.5 * delta_comp *
                              ula_gain((2.0 * n + 1.0) / (2.0 * N_b), N_b);
    pmf.gains.push_back(g);
    pmf.probs.push_back(p);
    total += p;
  }
  pmf.gains.push_back(0.0);
  pmf.probs.push_back(std::max(0.0, 1.0 - total));
  pmf.mean_gain = 0;
  for (size_t i = 0; i < pmf.gains.size(); ++i)
    pmf.mean_gain += pmf.gains[i] * pmf.probs[i];
  return pmf;
}

}  // namespace

const BeamGainPMF& beam_gain_pmf(int N_b, double delta_comp) {
  if (N_b < 2) throw DomainError("beam_gain_pmf: N_b must be >= 2");
  static std::mutex mu;
  static std::map<std::pair<int, double>, BeamGainPMF> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(N_b, delta_comp);
  auto it = cache.find(key);
  if (it == cache.end())
    it = cache.emplace(key, compute_pmf(N_b, delta_comp)).first;
  return it->second;
}

}  // namespace risemf
