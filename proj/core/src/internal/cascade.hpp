#pragma once

// Per-t_bu tabulation of the cascaded-link geometry: cumulative qualifying
// RIS intensity, conditional RIS-distance density and quantiles.  Shared by
// the analytic modules and the simulator's interferer sampling.

#include <vector>

#include "risemf/model.hpp"

namespace risemf::internal {

struct CascadeTable {
  double t_bu = 0;
  double lambda_r = 0;
  double t_max = 0;           // tabulation horizon
  double step = 0;
  std::vector<double> cum;    // lambda_r * int_0^{t_i} abar(t_bu,x) x dx
  double total = 0;           // cum at infinity
  double p_cl = 0;            // 1 - exp(-total)

  double cum_at(double t) const;
  // inverse conditional CDF of the serving-RIS distance; p in [0,1)
  double quantile(double p) const;
};

CascadeTable build_cascade_table(double t_bu, const NetworkParams& params,
                                 const DerivedConstants& dc);

// Internally synchronized cache keyed by (t_bu, beta, lambda_r).
const CascadeTable& cascade_table(double t_bu, const NetworkParams& params,
                                  const DerivedConstants& dc);

}  // namespace risemf::internal
