#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "risemf/errors.hpp"
#include "risemf/model.hpp"

using namespace risemf;

TEST_CASE("derive_constants matches hand-checked values at defaults") {
  NetworkParams p;
  auto d = derive_constants(p);
  CHECK(d.lambda_f == doctest::Approx(0.010707).epsilon(1e-4));
  CHECK(d.beta == doctest::Approx(0.015 / M_PI).epsilon(1e-12));
  CHECK(d.lambda_r == doctest::Approx(0.12 * 50e-5).epsilon(1e-12));
  CHECK(d.G_b == 8.0);
  CHECK(d.G_r == 256.0);
  CHECK(d.Ntilde_b == 3);
  // effective-area identity used by the Campbell-theorem moment
  CHECK(d.area_E / d.zeta == doctest::Approx(4 * M_PI).epsilon(1e-14));
  // power-control cutoff
  CHECK(d.T_max ==
        doctest::Approx(std::pow(0.2 / 8e-6, 1.0 / (2.09 * 0.6))).epsilon(1e-12));
}

TEST_CASE("derive_constants is pure") {
  NetworkParams p;
  auto a = derive_constants(p);
  auto b = derive_constants(p);
  CHECK(a.zeta == b.zeta);
  CHECK(a.T_max == b.T_max);
}

TEST_CASE("no-RIS degenerate cases accepted") {
  NetworkParams p;
  p.N_r = 0;
  CHECK(derive_constants(p).G_r == 0.0);
  p.N_r = 16;
  p.mu = 0;
  CHECK(derive_constants(p).lambda_r == 0.0);
}

TEST_CASE("validation rejects out-of-domain fields") {
  NetworkParams p;
  p.alpha_N = 1.5;
  CHECK_THROWS_AS(derive_constants(p), ValidationError);
  p = NetworkParams{};
  p.lambda_b = 0;
  CHECK_THROWS_AS(derive_constants(p), ValidationError);
  p = NetworkParams{};
  p.N_b = 0;
  CHECK_THROWS_AS(derive_constants(p), ValidationError);
  p = NetworkParams{};
  p.rho = 1.0;
  CHECK_THROWS_AS(derive_constants(p), ValidationError);
  // the error names the field
  p = NetworkParams{};
  p.alpha_N = 2.0;
  try {
    derive_constants(p);
    CHECK(false);
  } catch (const ValidationError& e) {
    CHECK(e.field() == "alpha_N");
  }
}

TEST_CASE("triangle_close law of cosines") {
  CHECK(triangle_close(100, 50, 0).t_br == doctest::Approx(50));
  CHECK(triangle_close(100, 50, M_PI).t_br == doctest::Approx(150));
  CHECK(triangle_close(100, 50, M_PI / 2).t_br ==
        doctest::Approx(std::sqrt(12500.0)));
}

TEST_CASE("triangle_close round-trips theta0") {
  for (double theta : {0.3, 1.1, 2.5, 3.0}) {
    auto g = triangle_close(100, 70, theta);
    // recompute |theta0| from the three sides
    double c = (g.t_bu * g.t_bu + g.t_ru * g.t_ru - g.t_br * g.t_br) /
               (2 * g.t_bu * g.t_ru);
    CHECK(std::acos(c) == doctest::Approx(std::fabs(theta)).epsilon(1e-9));
    // triangle inequality
    CHECK(g.t_br >= std::fabs(g.t_bu - g.t_ru) - 1e-9);
    CHECK(g.t_br <= g.t_bu + g.t_ru + 1e-9);
  }
}

TEST_CASE("vartheta0 is consistent with the triangle") {
  auto g = triangle_close(100, 50, M_PI / 2);
  // angle at RIS vertex from law of cosines
  double c = (g.t_ru * g.t_ru + g.t_br * g.t_br - g.t_bu * g.t_bu) /
             (2 * g.t_ru * g.t_br);
  CHECK(g.vartheta0 == doctest::Approx(std::acos(c)).epsilon(1e-12));
}
