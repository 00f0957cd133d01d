#pragma once

// Per-(parameter-set, t_bu) evaluation context shared by the downlink,
// uplink, and compliance modules: association split, cascaded-link geometry
// nodes, the interference Laplace exponent, and a lazily extended table of
// the interference characteristic function on the imaginary axis.

#include <complex>
#include <functional>
#include <memory>
#include <mutex>
#include <vector>

#include "interp.hpp"
#include "risemf/association.hpp"
#include "risemf/channel.hpp"
#include "risemf/model.hpp"

namespace risemf::internal {

using cplx = std::complex<double>;

// Quadrature node of the cascaded-link geometry conditioned on t_bu:
// t_ru from the serving-RIS quantile grid, theta0 from a uniform midpoint
// grid on (0, pi) (symmetry halves the circle).
struct ClNode {
  double t_ru, t_br, r, weight;  // r = t_ru * t_br, weights sum to 1
};

// log L_{I_B|t_bu}(-jx) tabulated on a uniform ln-x grid and extended on
// demand; below the grid the exponent is linear (j x E[I_B]), beyond the
// grid the transform has effectively vanished or plateaued.
class CharTable {
public:
  CharTable(std::function<cplx(double)> exponent_at, double mean_ib);

  cplx value(double x) const;  // L(-jx)
  double mean_ib() const { return mean_ib_; }

private:
  void extend_to(double ln_x) const;

  std::function<cplx(double)> exponent_at_;  // x -> log L(-jx)
  double mean_ib_;
  double ln_lo_, dln_;
  mutable std::vector<double> re_, im_;
  mutable UniformHermite hre_, him_;
  mutable bool dead_end_ = false;  // Re exponent fell below cutoff
  mutable std::mutex mu_;
};

struct LinkContext {
  NetworkParams params;
  DerivedConstants dc;
  double t_bu = 0;
  AssociationSplit split;
  const BeamGainPMF* pmf = nullptr;
  std::vector<ClNode> cl_nodes;  // empty when the cascaded link is impossible
  double mean_ib = 0;            // E[I_B | t_bu], W

  // log of the interference Laplace transform at complex s (Re s >= 0 or
  // purely imaginary); direct adaptive quadrature.
  cplx ib_exponent(cplx s) const;
  double ib_laplace(double s) const;  // exp(ib_exponent), real s

  const CharTable& char_table() const;

  // weighted average of f over the cascaded-geometry nodes
  double average_cl(const std::function<double(const ClNode&)>& f) const;
  // same, but f depends only on r = t_ru * t_br: f is sampled on a ln-r
  // grid and interpolated at the geometry nodes
  double average_cl_r(const std::function<double(double)>& f,
                      int table_nodes) const;

private:
  mutable std::shared_ptr<const CharTable> table_;
  mutable std::mutex table_mu_;
  friend std::shared_ptr<const LinkContext> link_context(const NetworkParams&,
                                                         double);
};

// Cached, keyed by the parameter bytes and t_bu.
std::shared_ptr<const LinkContext> link_context(const NetworkParams& params,
                                                double t_bu);

// Gauss-Legendre nodes of the nearest-BS distance (Rayleigh quantiles),
// used by the random-t_bu conditioning mode and the uplink averages.
std::vector<std::pair<double, double>> tbu_nodes(double lambda_b, int n);

uint64_t params_key(const NetworkParams& p);

}  // namespace risemf::internal
