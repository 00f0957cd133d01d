#pragma once

#include <complex>

#include "risemf/model.hpp"

namespace risemf {

// Deterministic received-power prefactor of the serving link and the fading
// shape that multiplies it.
struct LinkBudget {
  double p_a = 0;  // W
  int m_q = 1;
  LinkType link_type = LinkType::DL;
};

// Budget of a closed serving geometry (CL uses t_ru * t_br).
LinkBudget link_budget(const LinkGeometry& g, const NetworkParams& params);

// Laplace transform of the aggregate interference at the typical user,
// conditioned on the nearest-BS distance; Re(s) >= 0 or s purely imaginary.
std::complex<double> laplace_interference_dl(std::complex<double> s,
                                             double t_bu,
                                             const NetworkParams& params);

// Alzer-form conditional CCDF of the SINR (exact for m_q = 1).
double conditional_coverage_dl(double gamma, const LinkBudget& budget,
                               double t_bu, const NetworkParams& params);

double coverage_dl(double gamma, const NetworkParams& params,
                   const Conditioning& cond);

// Laplace transform of the conditional exposure W_q = (P_q + I_B) / E.
std::complex<double> laplace_emfe_dl(std::complex<double> s,
                                     const LinkBudget& budget, double t_bu,
                                     const NetworkParams& params);

// Gil-Pelaez inversion of laplace_emfe_dl.
double conditional_compliance_dl(double omega, const LinkBudget& budget,
                                 double t_bu, const NetworkParams& params);

double compliance_dl(double omega, const NetworkParams& params,
                     const Conditioning& cond);

struct MeanEmfe {
  double serving = 0;       // E[W_1], W/m^2
  double interference = 0;  // E[W_2], W/m^2
};

MeanEmfe mean_emfe_dl(const NetworkParams& params, const Conditioning& cond);

// P(SINR > gamma, W <= omega | serving geometry); exactly 0 when
// E*omega < sigma^2*gamma.
double joint_conditional_dl(double gamma, double omega,
                            const LinkBudget& budget, double t_bu,
                            const NetworkParams& params);

double joint_dl(double gamma, double omega, const NetworkParams& params,
                const Conditioning& cond);

}  // namespace risemf
