#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace risemf {

inline constexpr double kSpeedOfLight = 299792458.0;  // m/s, fixed

// Serving link types: direct LoS, cascaded (via RIS), direct NLoS.
enum class LinkType { DL, CL, DN };

const char* to_string(LinkType t);

// All scalar system parameters. Defaults follow the reference configuration
// used throughout the evaluation (28 GHz urban deployment).
struct NetworkParams {
  double lambda_b = 1e-5;    // BS density, per m^2
  double lambda_u = 20e-5;   // user density, per m^2
  double lambda_o = 50e-5;   // obstacle density, per m^2
  double mu = 0.12;          // fraction of RIS-equipped obstacles
  double L_o = 15.0;         // obstacle length, m
  int N_b = 8;               // BS antenna count
  int N_r = 16;              // RIS element count (0 = no RIS)
  double delta = 0.70710678118654752440;  // roll-off compensation factor
  double f = 28e9;           // carrier frequency, Hz
  double alpha_L = 2.09;     // LoS path-loss exponent
  double alpha_N = 3.75;     // NLoS path-loss exponent (> 2)
  int m_L = 3;               // Nakagami shape, LoS
  int m_N = 1;               // Nakagami shape, NLoS
  double p_b = 10.0;         // BS transmit power, W
  double sigma2_dl = 8e-12;  // downlink noise power, W
  double sigma2_ul = 8e-13;  // uplink noise power, W
  double p0 = 8e-6;          // power-control base, W
  double p_max = 0.2;        // max user transmit power, W
  double epsilon = 0.6;      // power-control factor, (0, 1]
  double SAR_ref = 0.0053;   // reference SAR, (W/kg)/W
  double W_max = 10.0;       // exposure limit, W/m^2
  double rho = 0.95;         // compliance quantile

  // Throws ValidationError naming the offending field.
  void validate() const;
};

struct DerivedConstants {
  double lambda_r;   // RIS density = mu * lambda_o
  double lambda_f;   // wavelength = c / f, m
  double zeta;       // reference path loss = (lambda_f / 4pi)^2
  double area_E;     // antenna effective area = lambda_f^2 / 4pi, m^2
  double beta;       // blockage rate = 2 lambda_o L_o / pi, per m
  double G_b;        // max BS gain = N_b
  double G_r;        // max RIS gain = N_r^2
  double T_max;      // power-control cutoff distance, m
  int Ntilde_b;      // floor(N_b/2) - 1
};

DerivedConstants derive_constants(const NetworkParams& params);

// Serving-triangle geometry. t_ru/t_br/theta0/vartheta0 only meaningful
// for cascaded links.
struct LinkGeometry {
  LinkType link_type = LinkType::DL;
  double t_bu = 0;       // BS-user distance, m
  double t_ru = 0;       // RIS-user distance, m (CL)
  double t_br = 0;       // BS-RIS distance, m (CL)
  double theta0 = 0;     // user-vertex angle between user->BS and user->RIS
  double vartheta0 = 0;  // RIS-vertex angle between RIS->user and RIS->BS
};

// Closes the serving triangle by the law of cosines and back-fills the
// RIS-vertex angle.
LinkGeometry triangle_close(double t_bu, double t_ru, double theta0);

struct QueryPoint {
  double gamma;   // SINR threshold, linear
  double omega;   // exposure level, W/m^2 (DL) or W/kg (UL)
  bool uplink = false;
};

enum class MetricKind { Coverage, Compliance, Joint };
enum class CurveSource { Analytic, Empirical };

struct CurvePoint {
  double threshold = 0;        // gamma or omega (linear units)
  double threshold2 = 0;       // omega for joint surfaces
  double probability = 0;
  double ci_half_width = 0;    // only for empirical curves
};

struct DistributionCurve {
  MetricKind metric = MetricKind::Coverage;
  CurveSource source = CurveSource::Analytic;
  bool uplink = false;
  std::vector<CurvePoint> grid;
};

// How the BS-user distance of the typical link is treated.
struct Conditioning {
  enum Mode { FixedTbu, RandomTbu } mode = FixedTbu;
  double t_bu = 100.0;  // m, used when mode == FixedTbu

  static Conditioning fixed(double t) { return {FixedTbu, t}; }
  static Conditioning random() { return {RandomTbu, 0.0}; }
};

}  // namespace risemf
