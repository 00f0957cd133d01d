#pragma once

// Adaptive Gauss-Kronrod (7-15) quadrature on finite intervals, templated so
// the same kernel serves real and complex integrands.

#include <cmath>
#include <complex>
#include <queue>
#include <vector>

namespace risemf::internal {

// Kronrod-15 abscissae on [0,1] half-interval plus weights; Gauss-7 weights
// embedded at the odd indices.
struct GK15 {
  static constexpr double xk[8] = {
      0.991455371120813, 0.949107912342759, 0.864864423359769,
      0.741531185599394, 0.586087235467691, 0.405845151377397,
      0.207784955007898, 0.0};
  static constexpr double wk[8] = {
      0.022935322010529, 0.063092092629979, 0.104790010322250,
      0.140653259715525, 0.169004726639267, 0.190350578064785,
      0.204432940075298, 0.209482141084728};
  static constexpr double wg[4] = {
      0.129484966168870, 0.279705391489277, 0.381830050505119,
      0.417959183673469};
};

inline double mag(double v) { return std::fabs(v); }
inline double mag(const std::complex<double>& v) { return std::abs(v); }

template <typename T, typename F>
void gk15_panel(F&& f, double a, double b, T& integral, double& err) {
  const double c = 0.5 * (a + b), h = 0.5 * (b - a);
  T ik = T{}, ig = T{};
  for (int i = 0; i < 8; ++i) {
    if (i == 7) {
      T fc = f(c);
      ik += GK15::wk[7] * fc;
      ig += GK15::wg[3] * fc;
      break;
    }
    T fl = f(c - h * GK15::xk[i]);
    T fr = f(c + h * GK15::xk[i]);
    ik += GK15::wk[i] * (fl + fr);
    if (i % 2 == 1) ig += GK15::wg[i / 2] * (fl + fr);
  }
  integral = h * ik;
  err = mag(h * (ik - ig));
}

// Worst-interval-first adaptive refinement.  Returns the integral; on exit
// err_out holds the final error estimate and ok reports convergence.
template <typename T, typename F>
T adaptive_gk(F&& f, double a, double b, double rel_tol, double abs_tol,
              int max_splits, double* err_out = nullptr, bool* ok = nullptr) {
  struct Node {
    double a, b, err;
    T val;
    bool operator<(const Node& o) const { return err < o.err; }
  };
  std::priority_queue<Node> q;
  Node root;
  root.a = a;
  root.b = b;
  gk15_panel<T>(f, a, b, root.val, root.err);
  q.push(root);
  T total = root.val;
  double total_err = root.err;
  int splits = 0;
  while (total_err > std::max(abs_tol, rel_tol * mag(total)) &&
         splits < max_splits) {
    Node worst = q.top();
    q.pop();
    double mid = 0.5 * (worst.a + worst.b);
    if (mid <= worst.a || mid >= worst.b) {
      q.push(worst);  // interval exhausted at double precision
      break;
    }
    Node l, r;
    l.a = worst.a;
    l.b = mid;
    r.a = mid;
    r.b = worst.b;
    gk15_panel<T>(f, l.a, l.b, l.val, l.err);
    gk15_panel<T>(f, r.a, r.b, r.val, r.err);
    total += l.val + r.val - worst.val;
    total_err += l.err + r.err - worst.err;
    q.push(l);
    q.push(r);
    ++splits;
  }
  if (err_out) *err_out = total_err;
  if (ok) *ok = total_err <= std::max(abs_tol, rel_tol * mag(total)) * 4;
  return total;
}

// Fixed-order Gauss-Legendre 16 on [a,b]; used where panel counts are chosen
// from oscillation analysis up front.
template <typename T, typename F>
T gl16(F&& f, double a, double b) {
  static constexpr double x[8] = {
      0.0950125098376374, 0.2816035507792589, 0.4580167776572274,
      0.6178762444026438, 0.7554044083550030, 0.8656312023878318,
      0.9445750230732326, 0.9894009349916499};
  static constexpr double w[8] = {
      0.1894506104550685, 0.1826034150449236, 0.1691565193950025,
      0.1495959888165767, 0.1246289712555339, 0.0951585116824928,
      0.0622535239386479, 0.0271524594117541};
  const double c = 0.5 * (a + b), h = 0.5 * (b - a);
  T acc = T{};
  for (int i = 0; i < 8; ++i)
    acc += w[i] * (f(c - h * x[i]) + f(c + h * x[i]));
  return h * acc;
}

}  // namespace risemf::internal
