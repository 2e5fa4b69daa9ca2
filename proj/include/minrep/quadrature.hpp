#pragma once

// Globally adaptive Gauss-Kronrod (7/15) quadrature.

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <queue>
#include <stdexcept>
#include <string>
#include <vector>

namespace minrep {

struct QuadratureResult {
  double value = 0;
  double error = 0;
  int evaluations = 0;
  int intervals = 0;
  bool converged = false;
};

class NonConvergence : public std::runtime_error {
 public:
  NonConvergence(const std::string& what, QuadratureResult partial)
      : std::runtime_error(what), partial_(partial) {}
  const QuadratureResult& partial() const { return partial_; }

 private:
  QuadratureResult partial_;
};

struct QuadratureOptions {
  double abs_tol = 0.0;
  double rel_tol = 1e-12;
  int max_intervals = 4000;
  bool throw_on_failure = true;
};

namespace detail {

inline constexpr std::array<double, 8> kXgk{
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851, 0.864864423359769072789712788640926,
    0.741531185599394439863864773280788, 0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
inline constexpr std::array<double, 8> kWgk{
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204, 0.104790010322250183839876322541518,
    0.140653259715525918745189590510238, 0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
inline constexpr std::array<double, 4> kWg{0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
                                           0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
  double a;
  double b;
  double value;
  double error;
  bool operator<(const Panel& o) const { return error < o.error; }
};

template <class F>
Panel gk15(F& f, double a, double b) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  const double fc = f(c);
  double kron = fc * kWgk[7];
  double gauss = fc * kWg[3];
  for (int j = 0; j < 7; ++j) {
    const double dx = h * kXgk[j];
    const double s = f(c - dx) + f(c + dx);
    kron += kWgk[j] * s;
    if (j % 2 == 1) gauss += kWg[j / 2] * s;
  }
  kron *= h;
  gauss *= h;
  return {a, b, kron, std::abs(kron - gauss)};
}

}  // namespace detail

/// Integral of f over [a, b]; bisects the panel with the largest error estimate until the
/// total estimate meets max(abs_tol, rel_tol |I|).
template <class F>
QuadratureResult integrate(F f, double a, double b, const QuadratureOptions& opt = {}) {
  std::priority_queue<detail::Panel> heap;
  heap.push(detail::gk15(f, a, b));
  QuadratureResult r;
  r.evaluations = 15;
  double value = heap.top().value;
  double error = heap.top().error;
  const double eps = 50 * std::numeric_limits<double>::epsilon();
  while (true) {
    const double tol = std::max(opt.abs_tol, opt.rel_tol * std::abs(value));
    if (error <= tol || error <= eps * std::abs(value)) {
      r.converged = true;
      break;
    }
    if (static_cast<int>(heap.size()) >= opt.max_intervals) break;
    const detail::Panel p = heap.top();
    heap.pop();
    const double mid = 0.5 * (p.a + p.b);
    if (!(mid > p.a && mid < p.b)) {
      heap.push(p);
      break;
    }
    const auto left = detail::gk15(f, p.a, mid);
    const auto right = detail::gk15(f, mid, p.b);
    r.evaluations += 30;
    value += left.value + right.value - p.value;
    error += left.error + right.error - p.error;
    heap.push(left);
    heap.push(right);
  }
  // Re-sum to avoid drift from incremental updates.
  value = 0;
  error = 0;
  r.intervals = static_cast<int>(heap.size());
  while (!heap.empty()) {
    value += heap.top().value;
    error += heap.top().error;
    heap.pop();
  }
  r.value = value;
  r.error = error;
  if (!r.converged && opt.throw_on_failure)
    throw NonConvergence("adaptive quadrature did not converge (error estimate " + std::to_string(error) +
                             ", value " + std::to_string(value) + ")",
                         r);
  return r;
}

/// Integral of f over [a, infinity) via t = a + u/(1-u).
template <class F>
QuadratureResult integrate_to_infinity(F f, double a, const QuadratureOptions& opt = {}) {
  auto g = [&](double u) {
    if (u >= 1.0) return 0.0;
    const double one_minus = 1.0 - u;
    const double t = a + u / one_minus;
    const double v = f(t) / (one_minus * one_minus);
    return std::isfinite(v) ? v : 0.0;
  };
  return integrate(g, 0.0, 1.0, opt);
}

/// Splits [a, inf) at the given breakpoints (ascending, all > a) and sums the pieces.
template <class F>
QuadratureResult integrate_split(F f, double a, const std::vector<double>& breaks, const QuadratureOptions& opt = {}) {
  QuadratureResult total;
  total.converged = true;
  double lo = a;
  auto accumulate = [&](const QuadratureResult& r) {
    total.value += r.value;
    total.error += r.error;
    total.evaluations += r.evaluations;
    total.intervals += r.intervals;
    total.converged = total.converged && r.converged;
  };
  for (double b : breaks) {
    accumulate(integrate(f, lo, b, opt));
    lo = b;
  }
  accumulate(integrate_to_infinity(f, lo, opt));
  return total;
}

}  // namespace minrep
