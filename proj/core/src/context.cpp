#include "internal/context.hpp"

#include <cmath>
#include <cstring>
#include <map>

#include "internal/cascade.hpp"
#include "internal/gk.hpp"
#include "risemf/errors.hpp"
#include "risemf/numerics.hpp"

namespace risemf::internal {

namespace {

constexpr double kTwoPi = 2.0 * M_PI;
constexpr double kNodesPerDecade = 32.0;
constexpr double kExponentCutoff = 46.0;  // e^{-46} ~ 1e-20
constexpr double kMaxTableX = 1e19;

cplx powi_inv(cplx base, int m) {
  cplx inv = 1.0 / base;
  cplx acc = inv;
  for (int i = 1; i < m; ++i) acc *= inv;
  return acc;
}

// 1 - kappa_v(z) with kappa_v(z) = sum_n p_n (1 + z G_n / m)^{-m}, computed
// as ((1+u)^m - 1)/(1+u)^m per level so tiny z does not cancel to noise
cplx one_minus_kappa(const BeamGainPMF& pmf, cplx z, int m) {
  cplx acc = 0;
  for (std::size_t n = 0; n < pmf.gains.size(); ++n) {
    if (pmf.probs[n] == 0 || pmf.gains[n] == 0) continue;
    cplx u = z * (pmf.gains[n] / m);
    cplx num = 0, uk = 1;
    double c = 1;
    for (int k = 1; k <= m; ++k) {
      c = c * (m - k + 1) / k;
      uk *= u;
      num += c * uk;
    }
    acc += pmf.probs[n] * num * powi_inv(1.0 + u, m);
  }
  return acc;
}

// geometric-panel truncation of a decaying complex integrand on [a, inf)
template <typename F>
cplx complex_semi_infinite(F&& f, double a) {
  cplx total = 0;
  double h = std::max(a, 1.0) * 0.5;
  double lo = a;
  int small_streak = 0;
  for (int iter = 0; iter < 200; ++iter) {
    cplx v = adaptive_gk<cplx>(f, lo, lo + h, 1e-8, 1e-13, 300);
    total += v;
    if (std::abs(v) < std::max(1e-11, 1e-8 * std::abs(total)))
      ++small_streak;
    else
      small_streak = 0;
    if (small_streak >= 2) return total;
    lo += h;
    h *= 2;
  }
  throw NumericalError("interference exponent integral did not converge",
                       total.real(), std::abs(total));
}

uint64_t mix(uint64_t h, uint64_t v) {
  h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  return h;
}

uint64_t bits(double v) {
  uint64_t u;
  std::memcpy(&u, &v, sizeof u);
  return u;
}

}  // namespace

uint64_t params_key(const NetworkParams& p) {
  uint64_t h = 0x243f6a8885a308d3ull;
  h = mix(h, bits(p.lambda_b));
  h = mix(h, bits(p.lambda_u));
  h = mix(h, bits(p.lambda_o));
  h = mix(h, bits(p.mu));
  h = mix(h, bits(p.L_o));
  h = mix(h, uint64_t(p.N_b));
  h = mix(h, uint64_t(p.N_r));
  h = mix(h, bits(p.delta));
  h = mix(h, bits(p.f));
  h = mix(h, bits(p.alpha_L));
  h = mix(h, bits(p.alpha_N));
  h = mix(h, uint64_t(p.m_L));
  h = mix(h, uint64_t(p.m_N));
  h = mix(h, bits(p.p_b));
  h = mix(h, bits(p.sigma2_dl));
  h = mix(h, bits(p.sigma2_ul));
  h = mix(h, bits(p.p0));
  h = mix(h, bits(p.p_max));
  h = mix(h, bits(p.epsilon));
  h = mix(h, bits(p.SAR_ref));
  h = mix(h, bits(p.W_max));
  h = mix(h, bits(p.rho));
  return h;
}

CharTable::CharTable(std::function<cplx(double)> exponent_at, double mean_ib)
    : exponent_at_(std::move(exponent_at)), mean_ib_(mean_ib) {
  dln_ = std::log(10.0) / kNodesPerDecade;
  if (mean_ib_ <= 0) {
    ln_lo_ = 0;
    return;
  }
  ln_lo_ = std::log(1e-4 / mean_ib_);
  hre_.x0 = him_.x0 = ln_lo_;
  hre_.dx = him_.dx = dln_;
}

void CharTable::extend_to(double ln_x) const {
  double last = hre_.y.empty() ? ln_lo_ - dln_
                               : ln_lo_ + dln_ * double(hre_.y.size() - 1);
  bool changed = false;
  while (!dead_end_ && last < ln_x && last < std::log(kMaxTableX)) {
    last = ln_lo_ + dln_ * double(hre_.y.size());
    cplx e = exponent_at_(std::exp(last));
    hre_.y.push_back(e.real());
    him_.y.push_back(e.imag());
    if (-e.real() > kExponentCutoff) dead_end_ = true;
    changed = true;
  }
  if (changed) {
    hre_.build_slopes();
    him_.build_slopes();
  }
}

cplx CharTable::value(double x) const {
  if (mean_ib_ <= 0) return 1.0;
  double lx = std::log(x);
  if (lx <= ln_lo_) return std::exp(cplx(0.0, x * mean_ib_));
  std::lock_guard<std::mutex> lock(mu_);
  extend_to(lx);
  double hi = ln_lo_ + dln_ * double(hre_.y.size() - 1);
  if (lx >= hi) {
    if (dead_end_) return 0.0;
    return std::exp(cplx(hre_.y.back(), him_.y.back()));  // plateau
  }
  return std::exp(cplx(hre_.eval(lx), him_.eval(lx)));
}

cplx LinkContext::ib_exponent(cplx s) const {
  if (params.lambda_b <= 0) return 0.0;
  const double pbz = params.p_b * dc.zeta;
  const BeamGainPMF& g = *pmf;
  cplx total = 0;
  // LoS component
  total += complex_semi_infinite(
      [&](double d) -> cplx {
        cplx z = s * (pbz * std::pow(d, -params.alpha_L));
        return one_minus_kappa(g, z, params.m_L) * d * std::exp(-dc.beta * d);
      },
      t_bu);
  // NLoS component
  total += complex_semi_infinite(
      [&](double d) -> cplx {
        cplx z = s * (pbz * std::pow(d, -params.alpha_N));
        return one_minus_kappa(g, z, params.m_N) * d *
               (-std::expm1(-dc.beta * d));
      },
      t_bu);
  return -kTwoPi * params.lambda_b * total;
}

double LinkContext::ib_laplace(double s) const {
  if (s == 0) return 1.0;
  return std::exp(ib_exponent(cplx(s, 0.0)).real());
}

const CharTable& LinkContext::char_table() const {
  std::lock_guard<std::mutex> lock(table_mu_);
  if (!table_) {
    table_ = std::make_shared<const CharTable>(
        [this](double x) { return ib_exponent(cplx(0.0, -x)); }, mean_ib);
  }
  return *table_;
}

double LinkContext::average_cl(
    const std::function<double(const ClNode&)>& f) const {
  double acc = 0;
  for (const ClNode& n : cl_nodes) acc += n.weight * f(n);
  return acc;
}

double LinkContext::average_cl_r(const std::function<double(double)>& f,
                                 int table_nodes) const {
  if (cl_nodes.empty()) return 0;
  double lo = cl_nodes.front().r, hi = lo;
  for (const ClNode& n : cl_nodes) {
    lo = std::min(lo, n.r);
    hi = std::max(hi, n.r);
  }
  if (hi <= lo * (1 + 1e-9)) return f(lo);
  if (table_nodes < 8) table_nodes = 8;
  UniformHermite table;
  table.x0 = std::log(lo);
  table.dx = (std::log(hi) - std::log(lo)) / double(table_nodes - 1);
  table.y.resize(table_nodes);
  for (int i = 0; i < table_nodes; ++i)
    table.y[i] = f(std::exp(table.x0 + i * table.dx));
  table.build_slopes();
  double acc = 0;
  for (const ClNode& n : cl_nodes) acc += n.weight * table.eval(std::log(n.r));
  return acc;
}

std::shared_ptr<const LinkContext> link_context(const NetworkParams& params,
                                                double t_bu) {
  static std::mutex cache_mu;
  static std::map<std::pair<uint64_t, uint64_t>,
                  std::shared_ptr<const LinkContext>>
      cache;
  std::pair<uint64_t, uint64_t> key{params_key(params), bits(t_bu)};
  {
    std::lock_guard<std::mutex> lock(cache_mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  auto ctx = std::make_shared<LinkContext>();
  ctx->params = params;
  ctx->dc = derive_constants(params);
  ctx->t_bu = t_bu;
  ctx->pmf = &beam_gain_pmf(params.N_b, params.delta);
  ctx->split = association_split(t_bu, params, ctx->dc);

  if (params.lambda_b > 0) {
    // E[I_B | t_bu] by Campbell's theorem under the discrete gain levels
    const double b = ctx->dc.beta * t_bu;
    double los = std::pow(t_bu, 2 - params.alpha_L) *
                 expint_En(params.alpha_L - 1, b);
    double nlos = std::pow(t_bu, 2 - params.alpha_N) *
                  (1.0 / (params.alpha_N - 2) -
                   expint_En(params.alpha_N - 1, b));
    ctx->mean_ib = kTwoPi * params.lambda_b * params.p_b * ctx->dc.zeta *
                   ctx->pmf->mean_gain * (los + nlos);
  }

  if (ctx->split.a_cl > 0) {
    const CascadeTable& cas = cascade_table(t_bu, params, ctx->dc);
    auto gl = gauss_legendre_01(32);
    const int n_theta = 64;
    ctx->cl_nodes.reserve(gl.size() * n_theta);
    for (const auto& [u, wu] : gl) {
      double t_ru = cas.quantile(u);
      for (int j = 0; j < n_theta; ++j) {
        double theta = M_PI * (j + 0.5) / n_theta;
        double t_br2 = t_bu * t_bu + t_ru * t_ru -
                       2 * t_bu * t_ru * std::cos(theta);
        double t_br = std::sqrt(std::max(t_br2, 1e-12));
        ctx->cl_nodes.push_back(
            {t_ru, t_br, t_ru * t_br, wu / double(n_theta)});
      }
    }
  }

  std::lock_guard<std::mutex> lock(cache_mu);
  auto [it, inserted] = cache.emplace(key, ctx);
  return it->second;
}

std::vector<std::pair<double, double>> tbu_nodes(double lambda_b, int n) {
  auto gl = gauss_legendre_01(n);
  std::vector<std::pair<double, double>> out;
  out.reserve(n);
  for (const auto& [u, w] : gl)
    out.push_back({std::sqrt(-std::log1p(-u) / (M_PI * lambda_b)), w});
  return out;
}

}  // namespace risemf::internal
