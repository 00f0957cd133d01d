#include "risemf/downlink.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>

#include "internal/context.hpp"
#include "internal/osc.hpp"
#include "risemf/errors.hpp"
#include "risemf/numerics.hpp"

namespace risemf {

using internal::ClNode;
using internal::cplx;
using internal::LinkContext;
using internal::link_context;

namespace {

constexpr double kMarginalTol = 4e-5;  // Gil-Pelaez absolute tolerance
constexpr double kJointTol = 1e-4;

double clamp01(double v, const char* what) {
  if (v < -1e-3 || v > 1 + 1e-3) {
    static std::atomic<int> warned{0};
    if (warned.fetch_add(1) < 5)
      std::fprintf(stderr, "risemf: %s clamped from %.6g\n", what, v);
  }
  return std::min(1.0, std::max(0.0, v));
}

double factorial(int m) {
  double f = 1;
  for (int i = 2; i <= m; ++i) f *= i;
  return f;
}

double binom(int n, int k) {
  double v = 1;
  for (int i = 1; i <= k; ++i) v = v * (n - k + i) / i;
  return v;
}

cplx powi_inv(cplx base, int m) {
  cplx inv = 1.0 / base;
  cplx acc = inv;
  for (int i = 1; i < m; ++i) acc *= inv;
  return acc;
}

LinkBudget budget_dl(const LinkContext& c) {
  return {c.params.p_b * c.dc.G_b * c.dc.zeta *
              std::pow(c.t_bu, -c.params.alpha_L),
          c.params.m_L, LinkType::DL};
}

LinkBudget budget_dn(const LinkContext& c) {
  return {c.params.p_b * c.dc.G_b * c.dc.zeta *
              std::pow(c.t_bu, -c.params.alpha_N),
          c.params.m_N, LinkType::DN};
}

LinkBudget budget_cl(const LinkContext& c, double r) {
  return {c.params.p_b * c.dc.G_b * c.dc.G_r * c.dc.zeta *
              std::pow(r, -c.params.alpha_L),
          c.params.m_L, LinkType::CL};
}

// A_q-weighted combination of a conditional metric over the three link
// types, with the cascaded geometry averaged through an ln-r table.
double aggregate_fixed(const NetworkParams& params, double t_bu, int r_nodes,
                       const std::function<double(const LinkBudget&,
                                                  const LinkContext&)>& f) {
  auto ctx = link_context(params, t_bu);
  double v = 0;
  if (ctx->split.a_dl > 0) v += ctx->split.a_dl * f(budget_dl(*ctx), *ctx);
  if (ctx->split.a_dn > 0) v += ctx->split.a_dn * f(budget_dn(*ctx), *ctx);
  if (ctx->split.a_cl > 0 && !ctx->cl_nodes.empty())
    v += ctx->split.a_cl *
         ctx->average_cl_r(
             [&](double r) { return f(budget_cl(*ctx, r), *ctx); }, r_nodes);
  return v;
}

double aggregate(const NetworkParams& params, const Conditioning& cond,
                 int r_nodes,
                 const std::function<double(const LinkBudget&,
                                            const LinkContext&)>& f) {
  if (cond.mode == Conditioning::FixedTbu)
    return aggregate_fixed(params, cond.t_bu, r_nodes, f);
  double acc = 0;
  for (const auto& [t, w] : internal::tbu_nodes(params.lambda_b, 24))
    acc += w * aggregate_fixed(params, t, r_nodes, f);
  return acc;
}

double cond_coverage(double gamma, const LinkBudget& b,
                     const LinkContext& ctx) {
  const int m = b.m_q;
  const double s = m * gamma / b.p_a;
  const double beta_m = std::pow(factorial(m), -1.0 / m);
  double acc = 0;
  for (int k = 1; k <= m; ++k) {
    double arg = k * beta_m * s;
    double sign = (k % 2 == 1) ? 1.0 : -1.0;
    acc += sign * binom(m, k) * std::exp(-arg * ctx.params.sigma2_dl) *
           ctx.ib_laplace(arg);
  }
  return clamp01(acc, "conditional coverage");
}

cplx emfe_char(double x, const LinkBudget& b, const LinkContext& ctx) {
  // E[e^{jxW}] with W = (P_a H + I_B) / E
  const double E = ctx.dc.area_E;
  cplx serving = powi_inv(cplx(1.0, -x * b.p_a / (b.m_q * E)), b.m_q);
  return serving * ctx.char_table().value(x / E);
}

double cond_compliance(double omega, const LinkBudget& b,
                       const LinkContext& ctx) {
  const double E = ctx.dc.area_E;
  const double mean_w = (b.p_a + ctx.mean_ib) / E;
  double x0 = 1e-9 / (omega + mean_w);
  double I = internal::half_line_oscillatory(
      [&](double x) -> cplx { return emfe_char(x, b, ctx) / (M_PI * x); },
      omega, x0, kMarginalTol);
  return clamp01(0.5 - I, "conditional compliance");
}

double cond_joint(double gamma, double omega, const LinkBudget& b,
                  const LinkContext& ctx) {
  const double E = ctx.dc.area_E;
  const double s2 = ctx.params.sigma2_dl;
  const double Pa = b.p_a;
  const int m = b.m_q;
  if (E * omega < s2 * gamma) return 0.0;
  const double h1 = s2 * gamma / Pa;
  const double h2 = E * omega / Pa;
  const double P1 = gamma * (E * omega + s2) / (1 + gamma);
  const double hp = P1 / Pa;
  const double nu = (E * omega - s2 * gamma) / (1 + gamma);

  double base = 0.5 * (gamma_ratio_lower(m, m * h2) -
                       gamma_ratio_lower(m, m * h1));

  // Xi_1 / Xi_2 endpoint amplitudes with the carrier e^{+-jx(...)} factored
  // out: the h = sigma^2 gamma / P_a and h = E omega / P_a endpoints carry
  // zero net frequency, both h = P1 / P_a endpoints carry frequency nu.
  auto S1 = [&](double h, double x) -> cplx {
    cplx bt(m, x * Pa / gamma);
    cplx jxpa(0.0, x * Pa);
    cplx acc = 0;
    double hk = 1, kfact = 1;
    for (int k = 0; k < m; ++k) {
      if (k > 0) {
        hk *= m * h;
        kfact *= k;
      }
      cplx c = double(k + 1) / bt;
      cplx inner = c;
      for (int i = 1; i <= k; ++i) {
        c *= double(k - i + 1) / (h * bt);
        inner += c;
      }
      acc += (hk / kfact) * (1.0 - jxpa / (gamma * (k + 1)) * inner);
    }
    return acc;
  };
  auto S2 = [&](double h, double x) -> cplx {
    cplx ct(m, -x * Pa);
    cplx jxpa(0.0, x * Pa);
    cplx acc = 0;
    double hk = 1, kfact = 1;
    for (int k = 0; k < m; ++k) {
      if (k > 0) {
        hk *= m * h;
        kfact *= k;
      }
      cplx c = double(k + 1) / ct;
      cplx inner = c;
      for (int i = 1; i <= k; ++i) {
        c *= double(k - i + 1) / (h * ct);
        inner += c;
      }
      acc += (hk / kfact) * (1.0 + jxpa / double(k + 1) * inner);
    }
    return acc;
  };

  const internal::CharTable& T = ctx.char_table();
  const double e1 = std::exp(-m * h1), e2 = std::exp(-m * h2),
               ep = std::exp(-m * hp);
  double x0 = 1e-9 / (s2 + E * omega + ctx.mean_ib + Pa);

  double I0 = internal::half_line_oscillatory(
      [&](double x) -> cplx {
        cplx z0 = e1 * S1(h1, x) - e2 * S2(h2, x);
        return z0 * T.value(x) / (M_PI * x);
      },
      0.0, x0, kJointTol);
  double In = internal::half_line_oscillatory(
      [&](double x) -> cplx {
        cplx zn = ep * (S2(hp, x) - S1(hp, x));
        return zn * T.value(x) / (M_PI * x);
      },
      nu, x0, kJointTol);
  return clamp01(base - I0 - In, "conditional joint");
}

}  // namespace

LinkBudget link_budget(const LinkGeometry& g, const NetworkParams& params) {
  DerivedConstants dc = derive_constants(params);
  switch (g.link_type) {
    case LinkType::DL:
      return {params.p_b * dc.G_b * dc.zeta * std::pow(g.t_bu, -params.alpha_L),
              params.m_L, LinkType::DL};
    case LinkType::CL:
      if (dc.G_r <= 0) throw DomainError("cascaded budget without RIS gain");
      return {params.p_b * dc.G_b * dc.G_r * dc.zeta *
                  std::pow(g.t_ru * g.t_br, -params.alpha_L),
              params.m_L, LinkType::CL};
    case LinkType::DN:
      return {params.p_b * dc.G_b * dc.zeta * std::pow(g.t_bu, -params.alpha_N),
              params.m_N, LinkType::DN};
  }
  throw DomainError("unknown link type");
}

std::complex<double> laplace_interference_dl(std::complex<double> s,
                                             double t_bu,
                                             const NetworkParams& params) {
  if (s == cplx(0.0, 0.0)) return 1.0;
  return std::exp(link_context(params, t_bu)->ib_exponent(s));
}

double conditional_coverage_dl(double gamma, const LinkBudget& budget,
                               double t_bu, const NetworkParams& params) {
  return cond_coverage(gamma, budget, *link_context(params, t_bu));
}

double coverage_dl(double gamma, const NetworkParams& params,
                   const Conditioning& cond) {
  return clamp01(aggregate(params, cond, 48,
                           [&](const LinkBudget& b, const LinkContext& c) {
                             return cond_coverage(gamma, b, c);
                           }),
                 "coverage");
}

std::complex<double> laplace_emfe_dl(std::complex<double> s,
                                     const LinkBudget& budget, double t_bu,
                                     const NetworkParams& params) {
  auto ctx = link_context(params, t_bu);
  const double E = ctx->dc.area_E;
  cplx serving = powi_inv(1.0 + s * (budget.p_a / (budget.m_q * E)),
                          budget.m_q);
  return serving * std::exp(ctx->ib_exponent(s / E));
}

double conditional_compliance_dl(double omega, const LinkBudget& budget,
                                 double t_bu, const NetworkParams& params) {
  return cond_compliance(omega, budget, *link_context(params, t_bu));
}

double compliance_dl(double omega, const NetworkParams& params,
                     const Conditioning& cond) {
  return clamp01(aggregate(params, cond, 48,
                           [&](const LinkBudget& b, const LinkContext& c) {
                             return cond_compliance(omega, b, c);
                           }),
                 "compliance");
}

MeanEmfe mean_emfe_dl(const NetworkParams& params, const Conditioning& cond) {
  if (params.alpha_N <= 2)
    throw DomainError("mean exposure requires alpha_N > 2");
  auto one = [&](double t_bu) -> MeanEmfe {
    auto ctx = link_context(params, t_bu);
    double serving = ctx->split.a_dl * budget_dl(*ctx).p_a +
                     ctx->split.a_dn * budget_dn(*ctx).p_a;
    if (ctx->split.a_cl > 0)
      serving += ctx->split.a_cl *
                 ctx->average_cl([&](const ClNode& n) {
                   return budget_cl(*ctx, n.r).p_a;
                 });
    return {serving / ctx->dc.area_E, ctx->mean_ib / ctx->dc.area_E};
  };
  if (cond.mode == Conditioning::FixedTbu) return one(cond.t_bu);
  MeanEmfe acc;
  for (const auto& [t, w] : internal::tbu_nodes(params.lambda_b, 24)) {
    MeanEmfe v = one(t);
    acc.serving += w * v.serving;
    acc.interference += w * v.interference;
  }
  return acc;
}

double joint_conditional_dl(double gamma, double omega,
                            const LinkBudget& budget, double t_bu,
                            const NetworkParams& params) {
  return cond_joint(gamma, omega, budget, *link_context(params, t_bu));
}

double joint_dl(double gamma, double omega, const NetworkParams& params,
                const Conditioning& cond) {
  return clamp01(aggregate(params, cond, 24,
                           [&](const LinkBudget& b, const LinkContext& c) {
                             return cond_joint(gamma, omega, b, c);
                           }),
                 "joint");
}

}  // namespace risemf
