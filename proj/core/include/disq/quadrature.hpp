#ifndef DISQ_QUADRATURE_HPP
#define DISQ_QUADRATURE_HPP

#include <utility>

#include "disq/polynomial.hpp"
#include "disq/tanh_sinh.hpp"

namespace disq {

struct IntegralResult {
  double value = 0.0;
  double abs_error_estimate = 0.0;
  int levels_used = 0;
  int pieces = 0;
};

// Some real root has multiplicity m >= n/2, so |f|^(-2/n) is not
// integrable across it (and the closed form C/|D|^(1/6) blows up with it).
class RepeatedRootDivergence : public QuadratureError {
 public:
  RepeatedRootDivergence(double root, int multiplicity, int n);
  double root() const { return root_; }
  int multiplicity() const { return multiplicity_; }

 private:
  double root_;
  int multiplicity_;
};

// The level cap was hit before the error estimate met the tolerance. The
// partial result carries the diagnostics.
class ToleranceNotReached : public QuadratureError {
 public:
  explicit ToleranceNotReached(const IntegralResult& partial);
  const IntegralResult& partial() const { return partial_; }

 private:
  IntegralResult partial_;
};

struct IntegrateOptions {
  double tol = 1e-10;
  int max_level = default_max_level();

  // Level cap default, overridable through DISQ_MAX_LEVEL.
  static int default_max_level();
};

// int_R |f(x)|^(-2/n) dx for f of degree n >= 3, tol in [1e-13, 1e-4].
//
// The domain is split at the refined real roots; each root sits exactly at
// a piece endpoint, where the tanh-sinh transform absorbs the |x-r|^(-2m/n)
// singularity. The tails beyond max(|roots|)+1 are folded onto bounded
// intervals by the inversion x -> 1/x, under which the integrand turns into
// |rev(f)(t)|^(-2/n), regular at t=0.
IntegralResult integrate_power(const Polynomial& f, int n, double tol);
IntegralResult integrate_power(const Polynomial& f, int n,
                               const IntegrateOptions& opt);

// Gaussian baseline: (numeric, closed form) for int_R dx/(ax^2+bx+c) with
// a > 0 and b^2 - 4ac < 0. Numeric side runs on the same piece/tail engine
// (no singularities, two tails); closed form is 2*pi/sqrt(4ac - b^2).
std::pair<double, double> gaussian_check(double a, double b, double c);
std::pair<double, double> gaussian_check(double a, double b, double c,
                                         double tol);

}  // namespace disq

#endif  // DISQ_QUADRATURE_HPP
