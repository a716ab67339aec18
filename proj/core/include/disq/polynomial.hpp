#ifndef DISQ_POLYNOMIAL_HPP
#define DISQ_POLYNOMIAL_HPP

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "disq/rational.hpp"

namespace disq {

// Dense univariate polynomial over the rationals.
//
// Coefficients are stored HIGHEST degree first: coeff(0) is the leading
// coefficient a0, coeff(degree()) the constant term a_n. A leading zero in
// user input is rejected rather than silently reduced, because downstream
// integral exponents depend on the declared degree. Arithmetic results are
// normalized (leading zeros trimmed) as usual.
class Polynomial {
 public:
  // The zero polynomial.
  Polynomial() : c_{Rational(0)} {}

  // Throws std::invalid_argument if coeffs is empty or has a leading zero
  // (unless it is the single-coefficient zero polynomial).
  explicit Polynomial(std::vector<Rational> coeffs);

  static Polynomial from_ints(std::initializer_list<long> coeffs);
  static Polynomial from_ints(const std::vector<long>& coeffs);

  // x^k, k >= 0.
  static Polynomial monomial(int k, Rational scale = Rational(1));

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.size() == 1 && c_[0] == 0; }
  bool is_constant() const { return c_.size() == 1; }

  const Rational& coeff(int i) const { return c_[static_cast<size_t>(i)]; }
  const std::vector<Rational>& coeffs() const { return c_; }
  const Rational& leading() const { return c_.front(); }
  const Rational& constant_term() const { return c_.back(); }

  Rational operator()(const Rational& x) const;
  double eval_double(double x) const;

  Polynomial operator-() const;
  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator*(const Rational& s) const;
  bool operator==(const Polynomial& o) const { return c_ == o.c_; }

  // Quotient and remainder over Q; divisor must be nonzero.
  static std::pair<Polynomial, Polynomial> divmod(const Polynomial& num,
                                                  const Polynomial& den);

  Polynomial derivative() const;

  // f(x + t), f(s*x), lambda*f and x^n*f(1/x). reversed() requires a
  // nonzero constant term so the degree is preserved.
  Polynomial translated(const Rational& t) const;
  Polynomial scaled_x(const Rational& s) const;
  Polynomial scaled(const Rational& lambda) const { return *this * lambda; }
  Polynomial reversed() const;

  Polynomial monic() const;

  std::vector<double> coeffs_double() const;

  // Diagnostic form, e.g. "x^3 - x".
  std::string to_string() const;

 private:
  struct Raw {};
  Polynomial(std::vector<Rational> coeffs, Raw) : c_(std::move(coeffs)) {}
  static Polynomial normalized(std::vector<Rational> coeffs);

  std::vector<Rational> c_;
};

inline Polynomial operator*(const Rational& s, const Polynomial& f) {
  return f * s;
}

// Monic gcd over Q; gcd(0, 0) is defined as 0.
Polynomial poly_gcd(const Polynomial& a, const Polynomial& b);

// Yun's algorithm: returns pairwise-coprime squarefree factors u_m with
// their multiplicities m, so that f = leading * prod u_m^m with each u_m
// monic. Constant f yields an empty list.
std::vector<std::pair<Polynomial, int>> squarefree_decomposition(
    const Polynomial& f);

// f / gcd(f, f') made monic; carries exactly the distinct roots of f.
Polynomial squarefree_part(const Polynomial& f);

// Cauchy bound: every real root lies strictly inside (-B, B).
Rational cauchy_root_bound(const Polynomial& f);

}  // namespace disq

#endif  // DISQ_POLYNOMIAL_HPP
