#include "risemf/model.hpp"

#include <cmath>

#include "risemf/errors.hpp"

namespace risemf {

const char* to_string(LinkType t) {
  switch (t) {
    case LinkType::DL: return "DL";
    case LinkType::CL: return "CL";
    case LinkType::DN: return "DN";
  }
  return "?";
}

namespace {

void require(bool ok, const char* field, const char* what) {
  if (!ok) throw ValidationError(field, what);
}

}  // namespace

void NetworkParams::validate() const {
  require(lambda_b > 0, "lambda_b", "must be > 0");
  require(lambda_u > 0, "lambda_u", "must be > 0");
  require(lambda_o > 0, "lambda_o", "must be > 0");
  require(mu >= 0 && mu <= 1, "mu", "must be in [0, 1]");
  require(L_o > 0, "L_o", "must be > 0");
  require(N_b >= 1, "N_b", "must be >= 1");
  require(N_r >= 0, "N_r", "must be >= 0");
  require(delta > 0 && delta <= 1, "delta", "must be in (0, 1]");
  require(f > 0, "f", "must be > 0");
  require(alpha_L > 0, "alpha_L", "must be > 0");
  require(alpha_N > 2, "alpha_N", "must be > 2");
  require(m_L >= 1, "m_L", "must be >= 1");
  require(m_N >= 1, "m_N", "must be >= 1");
  require(p_b > 0, "p_b", "must be > 0");
  require(sigma2_dl > 0, "sigma2_dl", "must be > 0");
  require(sigma2_ul > 0, "sigma2_ul", "must be > 0");
  require(p0 > 0, "p0", "must be > 0");
  require(p_max >= p0, "p_max", "must be >= p0");
  require(epsilon > 0 && epsilon <= 1, "epsilon", "must be in (0, 1]");
  require(SAR_ref > 0, "SAR_ref", "must be > 0");
  require(W_max > 0, "W_max", "must be > 0");
  require(rho > 0 && rho < 1, "rho", "must be in (0, 1)");
}

DerivedConstants derive_constants(const NetworkParams& p) {
  p.validate();
  DerivedConstants d;
  d.lambda_r = p.mu * p.lambda_o;
  d.lambda_f = kSpeedOfLight / p.f;
  const double pi = M_PI;
  d.zeta = (d.lambda_f / (4 * pi)) * (d.lambda_f / (4 * pi));
  d.area_E = d.lambda_f * d.lambda_f / (4 * pi);
  d.beta = 2 * p.lambda_o * p.L_o / pi;
  d.G_b = static_cast<double>(p.N_b);
  d.G_r = static_cast<double>(p.N_r) * static_cast<double>(p.N_r);
  d.T_max = std::pow(p.p_max / p.p0, 1.0 / (p.alpha_L * p.epsilon));
  d.Ntilde_b = p.N_b / 2 - 1;
  return d;
}

LinkGeometry triangle_close(double t_bu, double t_ru, double theta0) {
  if (t_bu <= 0) throw DomainError("triangle_close: t_bu must be > 0");
  if (t_ru <= 0) throw DomainError("triangle_close: t_ru must be > 0");
  LinkGeometry g;
  g.link_type = LinkType::CL;
  g.t_bu = t_bu;
  g.t_ru = t_ru;
  g.theta0 = theta0;
  const double c = std::cos(theta0);
  double t_br2 = t_bu * t_bu + t_ru * t_ru - 2 * t_bu * t_ru * c;
  g.t_br = std::sqrt(std::max(t_br2, 0.0));
  // Angle at the RIS vertex, between RIS->user and RIS->BS.
  if (g.t_br > 0) {
    double num = t_ru * t_ru + g.t_br * g.t_br - t_bu * t_bu;
    double r = num / (2 * t_ru * g.t_br);
    r = std::min(1.0, std::max(-1.0, r));
    g.vartheta0 = std::acos(r);
  } else {
    g.vartheta0 = 0;
  }
  return g;
}

}  // namespace risemf
