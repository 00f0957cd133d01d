#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>

#include "risemf/errors.hpp"
#include "risemf/numerics.hpp"

using namespace risemf;
using cplx = std::complex<double>;

TEST_CASE("semi-infinite integrals of known closed forms") {
  QuadratureSpec s;
  CHECK(integrate_semi_infinite([](double x) { return std::exp(-x); }, 0, s) ==
        doctest::Approx(1.0).epsilon(1e-8));
  CHECK(integrate_semi_infinite([](double x) { return 1.0 / (x * x); }, 1, s) ==
        doctest::Approx(1.0).epsilon(1e-6));
  // normalization of the nearest-BS distance density with lambda = 1
  CHECK(integrate_semi_infinite(
            [](double x) { return 2 * M_PI * x * std::exp(-M_PI * x * x); }, 0,
            s) == doctest::Approx(1.0).epsilon(1e-8));
}

TEST_CASE("semi-infinite result invariant under growth-factor change") {
  QuadratureSpec a, b;
  a.growth = 2.0;
  b.growth = 1.5;
  auto f = [](double x) { return std::exp(-0.3 * x) / (1 + x); };
  double va = integrate_semi_infinite(f, 0, a);
  double vb = integrate_semi_infinite(f, 0, b);
  CHECK(std::fabs(va - vb) <= 2 * a.rel_tol * std::fabs(va) + 2 * a.abs_tol);
}

TEST_CASE("gil_pelaez recovers the exponential CDF") {
  auto L = [](double x) { return 1.0 / (cplx(1.0, -x)); };  // L(-jx), mean 1
  double v = gil_pelaez_cdf(L, 1.0);
  CHECK(v == doctest::Approx(1.0 - std::exp(-1.0)).epsilon(2e-6));
}

TEST_CASE("gil_pelaez vs Gamma(m, 1/m) CDF across thresholds") {
  for (int m : {1, 2, 3}) {
    for (double w : {0.1, 0.5, 1.0, 2.0, 5.0}) {
      auto L = [m](double x) {
        return std::pow(cplx(1.0, -x / m), -static_cast<double>(m));
      };
      double got = gil_pelaez_cdf(L, w);
      double want = gamma_ratio_lower(m, m * w);
      CHECK(std::fabs(got - want) <= 1e-6);
    }
  }
}

TEST_CASE("gil_pelaez frozen oracle: Gamma(3,1/3) at 1") {
  auto L = [](double x) { return std::pow(cplx(1.0, -x / 3.0), -3.0); };
  CHECK(gil_pelaez_cdf(L, 1.0) == doctest::Approx(0.57681).epsilon(1e-4));
}

TEST_CASE("gil_pelaez small omega tends to zero") {
  auto L = [](double x) { return std::pow(cplx(1.0, -x / 3.0), -3.0); };
  CHECK(gil_pelaez_cdf(L, 1e-4) < 1e-3);
}

TEST_CASE("invert_monotone") {
  CHECK(invert_monotone([](double x) { return x; }, 0.95, 0, 1, 1e-12) ==
        doctest::Approx(0.95).epsilon(1e-9));
  CHECK(invert_monotone([](double x) { return 1 - std::exp(-x); }, 0.95, 0, 50,
                        1e-10) == doctest::Approx(-std::log(0.05)).epsilon(1e-7));
  // already compliant everywhere: lower endpoint
  CHECK(invert_monotone([](double) { return 1.0; }, 0.95, 2, 5, 1e-9) == 2.0);
  CHECK_THROWS_AS(
      invert_monotone([](double) { return 0.1; }, 0.95, 0, 1, 1e-9),
      BracketError);
}

TEST_CASE("gamma_ratio_lower and inverse") {
  CHECK(gamma_ratio_lower(1, 1.0) ==
        doctest::Approx(1 - std::exp(-1.0)).epsilon(1e-12));
  CHECK(gamma_ratio_lower_inv(1, 0.95) ==
        doctest::Approx(-std::log(0.05)).epsilon(1e-8));
  for (double p : {0.1, 0.5, 0.95}) {
    double x = gamma_ratio_lower_inv(3, p);
    CHECK(gamma_ratio_lower(3, x) == doctest::Approx(p).epsilon(1e-9));
  }
}

TEST_CASE("expint_En values and limits") {
  CHECK(expint_En(1, 1.0) == doctest::Approx(0.219384).epsilon(1e-5));
  CHECK(expint_En(2, 1.0) == doctest::Approx(0.148496).epsilon(1e-5));
  // recurrence E_{n+1}(x) = (e^{-x} - x E_n(x))/n
  double e1 = expint_En(1, 0.7);
  double e2 = expint_En(2, 0.7);
  CHECK(e2 == doctest::Approx((std::exp(-0.7) - 0.7 * e1) / 1.0).epsilon(1e-8));
  // E_n(0+) -> 1/(n-1)
  CHECK(expint_En(3, 1e-9) == doctest::Approx(0.5).epsilon(1e-6));
  // real (non-integer) order bracketed by integer neighbors
  double v = expint_En(1.09, 1.0);
  CHECK(v < expint_En(1.0, 1.0));
  CHECK(v > expint_En(2.0, 1.0));
  CHECK_THROWS_AS(expint_En(1.09, 0.0), DomainError);
}
