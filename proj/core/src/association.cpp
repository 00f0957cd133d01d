#include "risemf/association.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <tuple>

#include "internal/cascade.hpp"
#include "risemf/channel.hpp"
#include "risemf/errors.hpp"

namespace risemf {

double reflection_probability(double t_bu, double t, double theta) {
  if (t_bu <= 0 || t <= 0)
    throw DomainError("reflection_probability: distances must be > 0");
  double c = std::cos(theta);
  double den2 = t_bu * t_bu + t * t - 2 * t_bu * t * c;
  if (den2 < 1e-18 * t_bu * t_bu) return 0.25;  // RIS at the BS, by continuity
  double ratio = (t - t_bu * c) / std::sqrt(den2);
  ratio = std::clamp(ratio, -1.0, 1.0);
  return 0.5 - std::acos(ratio) / (2 * M_PI);
}

namespace {

// 128-point Gauss-Legendre nodes/weights on [0,1], generated by Newton on
// the Legendre polynomial at first use.
struct GL128 {
  double x[128], w[128];
  GL128() {
    const int n = 128;
    for (int i = 0; i < n / 2; ++i) {
      double t = std::cos(M_PI * (i + 0.75) / (n + 0.5));
      double p0, p1, dp;
      for (int iter = 0; iter < 100; ++iter) {
        p0 = 1;
        p1 = t;
        for (int k = 2; k <= n; ++k) {
          double p2 = ((2 * k - 1) * t * p1 - (k - 1) * p0) / k;
          p0 = p1;
          p1 = p2;
        }
        dp = n * (t * p1 - p0) / (t * t - 1);
        double dt = p1 / dp;
        t -= dt;
        if (std::fabs(dt) < 1e-15) break;
      }
      double ww = 2.0 / ((1 - t * t) * dp * dp);
      x[i] = 0.5 * (1 - t);
      x[n - 1 - i] = 0.5 * (1 + t);
      w[i] = 0.5 * ww;
      w[n - 1 - i] = 0.5 * ww;
    }
  }
};

const GL128& gl128() {
  static GL128 g;
  return g;
}

// mean_reflection(u) tabulated on x = u/(1+u).
struct MeanReflectionTable {
  static constexpr int N = 2048;
  double v[N + 1];
  MeanReflectionTable() {
    const GL128& g = gl128();
    for (int i = 0; i <= N; ++i) {
      double x = static_cast<double>(i) / N;
      if (i == 0) {
        v[i] = 0.25;
        continue;
      }
      if (i == N) {
        v[i] = 0.5;
        continue;
      }
      double u = x / (1 - x);
      double acc = 0;
      for (int k = 0; k < 128; ++k) {
        double theta = M_PI * g.x[k];
        acc += g.w[k] * reflection_probability(1.0, u, theta);
      }
      v[i] = acc;  // (1/pi) * int_0^pi, by even symmetry in theta
    }
  }
};

}  // namespace

double mean_reflection(double u) {
  if (u <= 0) return 0.25;
  static MeanReflectionTable table;
  double x = u / (1 + u);
  double fx = x * MeanReflectionTable::N;
  int i = std::min(static_cast<int>(fx), MeanReflectionTable::N - 1);
  double frac = fx - i;
  return table.v[i] * (1 - frac) + table.v[i + 1] * frac;
}

double abar(double t_bu, double t, const DerivedConstants& dc) {
  // integral over theta in (-pi, pi] of P_L(t) P_R(t_bu, t, theta)
  return 2 * M_PI * mean_reflection(t / t_bu) * std::exp(-dc.beta * t);
}

namespace internal {

CascadeTable build_cascade_table(double t_bu, const NetworkParams& params,
                                 const DerivedConstants& dc) {
  (void)params;
  CascadeTable tab;
  tab.t_bu = t_bu;
  tab.lambda_r = dc.lambda_r;
  tab.t_max = 27.6 / dc.beta;  // P_L below 1e-12 past this point
  const int n = 4096;
  tab.step = tab.t_max / n;
  tab.cum.resize(n + 1);
  tab.cum[0] = 0;
  double prev = 0;  // integrand abar * t at previous node
  for (int i = 1; i <= n; ++i) {
    double t = i * tab.step;
    double g = abar(t_bu, t, dc) * t;
    tab.cum[i] = tab.cum[i - 1] + 0.5 * (prev + g) * tab.step * dc.lambda_r;
    prev = g;
  }
  tab.total = tab.cum[n];
  tab.p_cl = -std::expm1(-tab.total);
  return tab;
}

double CascadeTable::cum_at(double t) const {
  if (t <= 0) return 0;
  if (t >= t_max) return total;
  double fx = t / step;
  int i = static_cast<int>(fx);
  double frac = fx - i;
  return cum[i] * (1 - frac) + cum[i + 1] * frac;
}

double CascadeTable::quantile(double p) const {
  p = std::clamp(p, 0.0, 1.0 - 1e-15);
  double target = -std::log1p(-p * p_cl);  // cum value to reach
  // binary search over the monotone cumulative table
  size_t lo = 0, hi = cum.size() - 1;
  while (hi - lo > 1) {
    size_t mid = (lo + hi) / 2;
    if (cum[mid] >= target)
      hi = mid;
    else
      lo = mid;
  }
  double c0 = cum[lo], c1 = cum[hi];
  double frac = (c1 > c0) ? (target - c0) / (c1 - c0) : 0.0;
  return (lo + frac) * step;
}

const CascadeTable& cascade_table(double t_bu, const NetworkParams& params,
                                  const DerivedConstants& dc) {
  static std::mutex mu;
  static std::map<std::tuple<double, double, double>, CascadeTable> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_tuple(t_bu, dc.beta, dc.lambda_r);
  auto it = cache.find(key);
  if (it == cache.end())
    it = cache.emplace(key, build_cascade_table(t_bu, params, dc)).first;
  return it->second;
}

}  // namespace internal

double cascade_existence(double t_bu, const NetworkParams& params,
                         const DerivedConstants& dc) {
  if (t_bu <= 0) throw DomainError("cascade_existence: t_bu must be > 0");
  if (dc.lambda_r <= 0 || dc.G_r <= 0) return 0.0;
  return internal::cascade_table(t_bu, params, dc).p_cl;
}

AssociationSplit association_split(double t_bu, const NetworkParams& params,
                                   const DerivedConstants& dc) {
  AssociationSplit s;
  s.a_dl = los_probability(t_bu, dc.beta);
  double p_n = 1.0 - s.a_dl;
  s.a_cl = p_n * cascade_existence(t_bu, params, dc);
  s.a_dn = 1.0 - s.a_dl - s.a_cl;
  return s;
}

double pdf_tbu(double t, double lambda_b) {
  if (t < 0) return 0;
  return 2 * M_PI * lambda_b * t * std::exp(-M_PI * lambda_b * t * t);
}

double pdf_tru_given_tbu(double t_ru, double t_bu, const NetworkParams& params,
                         const DerivedConstants& dc) {
  if (t_ru <= 0 || t_bu <= 0)
    throw DomainError("pdf_tru_given_tbu: distances must be > 0");
  const auto& tab = internal::cascade_table(t_bu, params, dc);
  if (tab.p_cl <= 0)
    throw DomainError("pdf_tru_given_tbu: cascaded link impossible");
  double a = abar(t_bu, t_ru, dc);
  return dc.lambda_r * t_ru * a * std::exp(-tab.cum_at(t_ru)) / tab.p_cl;
}

}  // namespace risemf
