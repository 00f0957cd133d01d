#pragma once

#include "risemf/model.hpp"

namespace risemf {

// Conditional serving-link probabilities at a given BS-user distance.
struct AssociationSplit {
  double a_dl = 0;  // direct LoS
  double a_cl = 0;  // cascaded via RIS
  double a_dn = 0;  // direct NLoS
};

// Probability that a uniformly oriented RIS at distance t from the user,
// at angle theta from the user->BS direction, faces both the user and the BS.
double reflection_probability(double t_bu, double t, double theta);

// Mean of reflection_probability over theta uniform on (-pi, pi]; depends on
// the geometry only through u = t / t_bu.
double mean_reflection(double u);

// a-bar(t_bu, t): reflection probability integrated over theta, weighted by
// the RIS-user LoS probability.
double abar(double t_bu, double t, const DerivedConstants& dc);

// P_CL(t_bu) = 1 - exp(-lambda_r int_0^inf abar(t_bu,t) t dt).
double cascade_existence(double t_bu, const NetworkParams& params,
                         const DerivedConstants& dc);

AssociationSplit association_split(double t_bu, const NetworkParams& params,
                                   const DerivedConstants& dc);

// Nearest-BS distance density: 2 pi lambda_b t exp(-pi lambda_b t^2).
double pdf_tbu(double t, double lambda_b);

// Serving-RIS distance density conditioned on the cascaded link existing.
double pdf_tru_given_tbu(double t_ru, double t_bu, const NetworkParams& params,
                         const DerivedConstants& dc);

}  // namespace risemf
