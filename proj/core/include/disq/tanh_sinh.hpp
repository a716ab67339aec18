#ifndef DISQ_TANH_SINH_HPP
#define DISQ_TANH_SINH_HPP

#include <cmath>
#include <limits>
#include <stdexcept>
#include <type_traits>
#include <utility>

namespace disq {

class QuadratureError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct TanhSinhOptions {
  double tol = 1e-10;
  int max_level = 12;
};

struct TanhSinhResult {
  double value = 0.0;
  double error = 0.0;  // difference of the last two refinement levels
  int levels = 0;
  bool converged = false;
};

namespace detail {

struct TsNode {
  double x;       // abscissa
  double dist;    // exact distance to the nearer endpoint
  double weight;  // transform weight times the interval half-width
  bool at_end;    // abscissa collided with an endpoint: stop this direction
};

// Abscissa/weight of the tanh-sinh transform at parameter t on [a, b].
// The distance to the nearer endpoint is computed in exp form, without
// cancellation, so integrands can resolve endpoint singularities all the
// way into the denormal range.
inline TsNode tanh_sinh_node(double t, double a, double b) {
  const double half_pi = 1.5707963267948966;
  const double hw = 0.5 * (b - a);
  const double u = half_pi * std::sinh(t);
  const double e = std::exp(-2.0 * std::abs(u));  // e^(-2|u|)
  const double dist = (b - a) * e / (1.0 + e);
  const double sech2 = 4.0 * e / ((1.0 + e) * (1.0 + e));
  const double w = hw * half_pi * std::cosh(t) * sech2;
  TsNode n;
  n.dist = dist;
  n.weight = w;
  n.x = t >= 0.0 ? b - dist : a + dist;
  n.at_end = dist <= 0.0 || w <= 0.0;
  return n;
}

template <class F>
double invoke_integrand(F&& f, double x, double da, double db) {
  if constexpr (std::is_invocable_v<F, double, double, double>)
    return f(x, da, db);
  else
    return f(x);
}

}  // namespace detail

// Doubling-level trapezoid sums on the tanh-sinh transform of [a, b].
//
// The integrand may be called either as f(x) or as f(x, dist_a, dist_b),
// where the distances to the endpoints are exact even when x itself has
// rounded onto an endpoint; the three-argument form is what lets endpoint
// singularities |x - r|^(-alpha), alpha < 1, be evaluated losslessly.
// Convergence: |S_L - S_{L-1}| <= tol * max(1, |S_L|).
template <class F>
TanhSinhResult tanh_sinh_integrate(F&& f, double a, double b,
                                   const TanhSinhOptions& opt = {}) {
  TanhSinhResult res;
  if (!(a < b)) {
    res.converged = true;
    return res;
  }

  const double width = b - a;
  const double eps = std::numeric_limits<double>::epsilon();

  // Raw (h-free) compensated sum of the weighted samples.
  double sum = 0.0, comp = 0.0;
  auto accumulate = [&](double term) {
    double y = term - comp;
    double t = sum + y;
    comp = (t - sum) - y;
    sum = t;
  };

  auto sample = [&](double t) -> std::pair<double, bool> {
    detail::TsNode n = detail::tanh_sinh_node(t, a, b);
    if (n.at_end) return {0.0, false};
    const double da = t >= 0.0 ? width - n.dist : n.dist;
    const double db = t >= 0.0 ? n.dist : width - n.dist;
    double v = detail::invoke_integrand(f, n.x, da, db);
    if (!std::isfinite(v)) {
      // Collisions with the endpoint in double precision terminate the
      // direction; anything else is a genuinely bad sample.
      if (n.dist <= 8.0 * eps * (std::abs(a) + std::abs(b)))
        return {0.0, false};
      throw QuadratureError("non-finite sample at interior abscissa");
    }
    return {v * n.weight, true};
  };

  // |t| beyond 7.06 puts the abscissa distance below the double denormal
  // range for any interval width, so nothing is ever lost by this cap.
  const double t_cap = 7.1;

  double prev_value = 0.0;
  for (int level = 0; level <= opt.max_level; ++level) {
    const double h = std::ldexp(1.0, -level);
    const int stride = level == 0 ? 1 : 2;
    const int start = level == 0 ? 0 : 1;

    for (int dir = 0; dir < 2; ++dir) {
      int misses = 0;
      for (int k = start; ; k += stride) {
        if (level == 0 && dir == 1 && k == 0) k = stride;  // t=0 only once
        double t = k * h;
        if (t > t_cap) break;
        auto [term, ok] = sample(dir == 0 ? t : -t);
        if (!ok) break;
        accumulate(term);
        // Terms decay double-exponentially past the peak; stop a direction
        // only after several consecutive negligible ones, and never before
        // the transform has left the bulk of the interval.
        const double scale = std::max(1.0, std::abs(sum));
        if (t >= 1.0 && std::abs(term) <= 0.05 * opt.tol * scale) {
          if (++misses >= 4) break;
        } else {
          misses = 0;
        }
      }
    }

    const double value = sum * h;
    res.levels = level;
    res.value = value;
    if (level >= 1) res.error = std::abs(value - prev_value);
    // Accept only from level 3 on: early-level differences can be
    // accidentally small before the transform has resolved the integrand.
    if (level >= 3 && (res.error <= opt.tol * std::max(1.0, std::abs(value)) ||
                       res.error <= 4.0 * eps * std::abs(value))) {
      res.converged = true;
      return res;
    }
    prev_value = value;
  }
  return res;
}

// The plain two-value surface: (value, error estimate). Throws if the
// level cap is hit before the tolerance.
template <class F>
std::pair<double, double> tanh_sinh(F&& f, double a, double b, double tol) {
  TanhSinhOptions opt;
  opt.tol = tol;
  TanhSinhResult r = tanh_sinh_integrate(std::forward<F>(f), a, b, opt);
  if (!r.converged)
    throw QuadratureError("tanh-sinh level cap reached before tolerance");
  return {r.value, r.error};
}

}  // namespace disq

#endif  // DISQ_TANH_SINH_HPP
