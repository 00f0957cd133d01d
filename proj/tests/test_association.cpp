#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "risemf/association.hpp"
#include "risemf/errors.hpp"
#include "risemf/model.hpp"
#include "risemf/numerics.hpp"

using namespace risemf;

TEST_CASE("reflection_probability closed cases") {
  CHECK(reflection_probability(100, 40, M_PI) == doctest::Approx(0.5));
  CHECK(reflection_probability(100, 40, 0.0) ==
        doctest::Approx(0.0).epsilon(1e-12));
  CHECK(reflection_probability(100, 100, M_PI / 2) == doctest::Approx(3.0 / 8));
  // degenerate coincidence handled by continuity
  CHECK(reflection_probability(100, 100, 0.0) == doctest::Approx(0.25));
  // always within [0, 1/2]
  for (double t : {1.0, 50.0, 100.0, 400.0})
    for (double th = -3.1; th <= 3.14; th += 0.17) {
      double v = reflection_probability(100, t, th);
      CHECK(v >= 0.0);
      CHECK(v <= 0.5);
    }
}

TEST_CASE("mean_reflection limits") {
  CHECK(mean_reflection(1e-9) == doctest::Approx(0.25).epsilon(1e-3));
  CHECK(mean_reflection(1e9) == doctest::Approx(0.5).epsilon(1e-3));
  // direct quadrature cross-check at u = 1
  QuadratureSpec s;
  double direct =
      integrate([](double th) { return reflection_probability(1, 1, th); }, 0,
                M_PI, s) /
      M_PI;
  CHECK(mean_reflection(1.0) == doctest::Approx(direct).epsilon(1e-5));
}

TEST_CASE("cascade_existence basic behavior") {
  NetworkParams p;
  auto d = derive_constants(p);
  double v = cascade_existence(100, p, d);
  CHECK(v > 0.0);
  CHECK(v < 1.0);

  NetworkParams none = p;
  none.mu = 0;
  CHECK(cascade_existence(100, none, derive_constants(none)) == 0.0);

  // saturates toward 1 as RIS density grows (beta held fixed)
  NetworkParams dense = p;
  dense.mu = 1.0;
  dense.lambda_o = 1.0;
  dense.L_o = 50e-5 * 15.0;  // keeps lambda_o * L_o, hence beta, unchanged
  CHECK(cascade_existence(100, dense, derive_constants(dense)) ==
        doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("cascade_existence monotonicity in lambda_r and beta") {
  NetworkParams p;
  double prev = -1;
  for (double mu : {0.05, 0.1, 0.2, 0.4, 0.8}) {
    NetworkParams q = p;
    q.mu = mu;
    double v = cascade_existence(100, q, derive_constants(q));
    CHECK(v >= prev);
    prev = v;
  }
  // more blockage -> fewer cascaded links
  prev = 2;
  for (double lo : {20e-5, 40e-5, 80e-5, 160e-5, 320e-5}) {
    NetworkParams q = p;
    q.lambda_o = lo;
    q.mu = 0.12 * 50e-5 / lo;  // hold lambda_r fixed while beta grows
    double v = cascade_existence(100, q, derive_constants(q));
    CHECK(v <= prev + 1e-12);
    prev = v;
  }
}

TEST_CASE("association_split sums to one on a log grid of distances") {
  NetworkParams p;
  auto d = derive_constants(p);
  for (double t = 1; t <= 1000; t *= 1.5) {
    auto s = association_split(t, p, d);
    CHECK(s.a_dl >= 0);
    CHECK(s.a_cl >= 0);
    CHECK(s.a_dn >= -1e-12);
    CHECK(std::fabs(s.a_dl + s.a_cl + s.a_dn - 1.0) <= 1e-9);
  }
  // t -> 0: certain LoS
  auto s0 = association_split(1e-6, p, d);
  CHECK(s0.a_dl == doctest::Approx(1.0).epsilon(1e-6));
  // no RIS: a_cl = 0 and a_dn is the NLoS probability
  NetworkParams none = p;
  none.mu = 0;
  auto dn = derive_constants(none);
  auto sn = association_split(100, none, dn);
  CHECK(sn.a_cl == 0.0);
  CHECK(sn.a_dn == doctest::Approx(1.0 - sn.a_dl));
}

TEST_CASE("pdf_tbu normalization and mode") {
  QuadratureSpec s;
  double total = integrate_semi_infinite(
      [](double t) { return pdf_tbu(t, 1e-5); }, 0, s);
  CHECK(total == doctest::Approx(1.0).epsilon(1e-8));
  double mode = 1.0 / std::sqrt(2 * M_PI * 1e-5);
  CHECK(mode == doctest::Approx(126.16).epsilon(1e-3));
  CHECK(pdf_tbu(mode, 1e-5) > pdf_tbu(mode * 0.9, 1e-5));
  CHECK(pdf_tbu(mode, 1e-5) > pdf_tbu(mode * 1.1, 1e-5));
}

TEST_CASE("pdf_tru_given_tbu integrates to one") {
  NetworkParams p;
  auto d = derive_constants(p);
  QuadratureSpec s;
  s.rel_tol = 1e-8;
  double total = integrate(
      [&](double t) { return pdf_tru_given_tbu(t, 100, p, d); }, 1e-6,
      27.6 / d.beta, s);
  CHECK(total == doctest::Approx(1.0).epsilon(1e-4));

  NetworkParams none = p;
  none.mu = 0;
  CHECK_THROWS_AS(pdf_tru_given_tbu(50, 100, none, derive_constants(none)),
                  DomainError);
}
