#ifndef DISQ_SPECFUN_HPP
#define DISQ_SPECFUN_HPP

namespace disq {

enum class GammaMethod { lanczos, reflection };

struct SpecialValue {
  double value;
  GammaMethod method;
};

// Gamma function for real p away from the poles at 0, -1, -2, ...
// Lanczos approximation for p >= 0.5, reflection formula below.
double gamma(double p);
SpecialValue gamma_value(double p);

// B(p, q) = Gamma(p) Gamma(q) / Gamma(p+q), p, q > 0.
double beta(double p, double q);

// The half-line form B(p,q) = int_0^inf x^(p-1) (1+x)^(-p-q) dx, evaluated
// numerically; a cross-check between this module and the quadrature engine.
double beta_by_integral(double p, double q, double tol);

// C- = cbrt(2) B(1/2, 1/6) and C+ = 3 B(1/3, 1/3), with C+ = sqrt(3) C-.
// Computed, not hard-coded, so tests can pin them against independent
// high-precision digits.
double constant_C_minus();
double constant_C_plus();

}  // namespace disq

#endif  // DISQ_SPECFUN_HPP
