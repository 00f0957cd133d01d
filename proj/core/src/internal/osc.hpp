#pragma once

// Half-line integrals of the Gil-Pelaez type,
//   int_{x0}^inf Im[ e^{-j w x} g(x) ] dx,
// where g is slowly varying relative to the explicit carrier frequency w.
// Decade-by-decade Gauss-Legendre panels sized by the phase span, with a
// two-term integration-by-parts closure once w*x is large; characteristic
// functions of interference fields have magnitude plateaus that make a plain
// truncation hopeless, so the closure is essential, not an optimization.

#include <cmath>
#include <complex>
#include <functional>

#include "gk.hpp"
#include "risemf/errors.hpp"

namespace risemf::internal {

using cplx = std::complex<double>;

struct IbpTail {
  double value = 0;
  double err = 0;
};

// e^{-jwa} ( g(a)/(jw) + g'(a)/(jw)^2 ), derivative by central differences;
// valid while g's residual phase drift is slow against w.
inline IbpTail ibp_tail(const std::function<cplx(double)>& g, double w,
                        double a) {
  const cplx jw(0.0, w);
  double h = 0.02 * a;
  cplx gm = g(a - h), g0 = g(a), gp = g(a + h);
  cplx d1 = (gp - gm) / (2 * h);
  cplx d2 = (gp - 2.0 * g0 + gm) / (h * h);
  cplx tail = std::exp(cplx(0.0, -w * a)) * (g0 / jw + d1 / (jw * jw));
  IbpTail out;
  out.value = tail.imag();
  out.err = std::abs(d2) / (w * w * w) + 1e-15 * std::abs(g0) / w;
  return out;
}

// w == 0 is allowed (purely decaying integrand with at most slow internal
// phase drift); the tail is then closed by the direct bound |g(b)| * b,
// which assumes decay at least as fast as 1/x^2 once the bound is small.
inline double half_line_oscillatory(const std::function<cplx(double)>& g,
                                    double w, double x0, double abs_tol,
                                    int max_decades = 70) {
  double total = 0;
  double a = x0;
  int small_streak = 0;
  double prev_mag = -1;
  for (int dec = 0; dec < max_decades; ++dec) {
    double b = 10 * a;
    double phase = w * (b - a);
    long n = std::lround(std::ceil(phase / 4.0));
    if (n < 16) n = 16;
    if (n > 400 && w * a > 40) {
      IbpTail t = ibp_tail(g, w, a);
      if (t.err < 0.25 * abs_tol) return total + t.value;
    }
    if (n > 60000) n = 60000;  // last-resort cap; streak rules still apply
    double contrib = 0;
    double step = (b - a) / double(n);
    for (long i = 0; i < n; ++i) {
      double lo = a + i * step, hi = lo + step;
      contrib += gl16<double>(
          [&](double x) {
            cplx v = g(x) * std::exp(cplx(0.0, -w * x));
            return v.imag();
          },
          lo, hi);
    }
    total += contrib;
    double gb = std::abs(g(b));
    small_streak = (std::fabs(contrib) < 0.25 * abs_tol) ? small_streak + 1 : 0;
    bool decayed = prev_mag >= 0 && gb <= 0.45 * prev_mag;
    prev_mag = gb;
    if (small_streak >= 2) {
      if (decayed && gb * b < abs_tol) return total;
      if (w > 0 && w * b > 40) {
        IbpTail t = ibp_tail(g, w, b);
        if (t.err < 0.25 * abs_tol) return total + t.value;
      }
    }
    a = b;
  }
  throw NumericalError("oscillatory half-line integral did not converge",
                       total, prev_mag * a);
}

}  // namespace risemf::internal
