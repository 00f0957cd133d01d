#pragma once

#include <cmath>
#include <vector>

#include "risemf/model.hpp"

namespace risemf {

// Exact ULA beam gain at spatial AoD deviation delta in [-1, 1]:
//   sin^2(pi N_b delta) / (N_b sin^2(pi delta)),
// with removable singularities at delta in {0, +-1} equal to N_b.
double ula_gain(double delta, int N_b);

// Discrete multi-lobe approximation: piecewise-constant levels
//   G_0 = (delta_comp/2) N_b,  G_n = (delta_comp/2) G_ULA((2n+1)/(2N_b)),
//   G_{Ntilde_b+1} = 0,
// with the fold G_B(d) = G_B(|d -+ 1|) for |d| > 1/2.
double discrete_gain(double delta, int N_b, double delta_comp);

double los_probability(double t, double beta);

// zeta * t^{-alpha}; t = 0 is singular.
double pathloss(double t, double alpha, double zeta);

// Unit-mean Nakagami-m power coefficient (Gamma(m, 1/m)).
double nakagami_cdf(double h, int m);
double nakagami_pdf(double h, int m);

template <class URBG>
double nakagami_sample(int m, URBG& g) {
  // sum of m unit exponentials, scaled; exact for integer m
  double acc = 0;
  for (int i = 0; i < m; ++i) {
    double u = (g() >> 11) * 0x1.0p-53;
    acc += -std::log1p(-u);
  }
  return acc / m;
}

// Distribution of the discrete interferer beam gain when both alignment
// angles are independent and uniform (Lemma-1 statistics).
struct BeamGainPMF {
  std::vector<double> gains;  // G_0 ... G_{Ntilde_b+1}, last entry 0
  std::vector<double> probs;  // p_n, sums to 1
  double mean_gain = 0;       // sum G_n p_n
};

// Computed once per (N_b, delta_comp) and cached; thread-safe.
const BeamGainPMF& beam_gain_pmf(int N_b, double delta_comp);

}  // namespace risemf
