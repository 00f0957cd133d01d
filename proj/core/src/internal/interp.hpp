#pragma once

// Small interpolation helpers shared by the analytic modules: uniform-grid
// cubic Hermite tables (slopes from central differences) and a Gauss-Legendre
// node generator for fixed-order averaging grids.

#include <cmath>
#include <cstddef>
#include <utility>
#include <vector>

namespace risemf::internal {

struct UniformHermite {
  double x0 = 0, dx = 1;
  std::vector<double> y, slope;

  void build_slopes() {
    const std::size_t n = y.size();
    slope.assign(n, 0.0);
    if (n < 2) return;
    slope[0] = (y[1] - y[0]) / dx;
    slope[n - 1] = (y[n - 1] - y[n - 2]) / dx;
    for (std::size_t i = 1; i + 1 < n; ++i)
      slope[i] = (y[i + 1] - y[i - 1]) / (2 * dx);
  }

  // clamped at the ends
  double eval(double x) const {
    const std::size_t n = y.size();
    if (n == 0) return 0;
    double u = (x - x0) / dx;
    if (u <= 0) return y[0];
    if (u >= double(n - 1)) return y[n - 1];
    std::size_t i = std::size_t(u);
    double t = u - double(i);
    double h00 = (1 + 2 * t) * (1 - t) * (1 - t);
    double h10 = t * (1 - t) * (1 - t);
    double h01 = t * t * (3 - 2 * t);
    double h11 = t * t * (t - 1);
    return h00 * y[i] + h10 * dx * slope[i] + h01 * y[i + 1] +
           h11 * dx * slope[i + 1];
  }
};

// Gauss-Legendre nodes/weights mapped to (0,1); weights sum to 1.
inline std::vector<std::pair<double, double>> gauss_legendre_01(int n) {
  std::vector<std::pair<double, double>> out(n);
  for (int i = 0; i < n; ++i) {
    // Newton iteration from the Chebyshev initial guess
    double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    double pp = 0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1, p1 = x;
      for (int k = 2; k <= n; ++k) {
        double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      pp = n * (x * p1 - p0) / (x * x - 1);
      double dxn = p1 / pp;
      x -= dxn;
      if (std::fabs(dxn) < 1e-15) break;
    }
    double w = 2.0 / ((1 - x * x) * pp * pp);
    out[i] = {0.5 * (1 + x), 0.5 * w};
  }
  return out;
}

}  // namespace risemf::internal
