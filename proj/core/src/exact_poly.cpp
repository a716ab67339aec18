#include "disq/exact_poly.hpp"

#include <stdexcept>

namespace disq {

RationalMatrix sylvester_matrix(const Polynomial& f, const Polynomial& g) {
  if (f.is_zero() || g.is_zero())
    throw std::invalid_argument("sylvester matrix of the zero polynomial");
  const int n = f.degree();
  const int m = g.degree();
  if (n < 1 || m < 1)
    throw std::invalid_argument("sylvester matrix needs degrees >= 1");

  RationalMatrix s(n + m, n + m);
  for (int r = 0; r < n + m; ++r)
    for (int c = 0; c < n + m; ++c) s.at(r, c) = 0;
  for (int r = 0; r < m; ++r)
    for (int j = 0; j <= n; ++j) s.at(r, r + j) = f.coeff(j);
  for (int r = 0; r < n; ++r)
    for (int j = 0; j <= m; ++j) s.at(m + r, r + j) = g.coeff(j);
  return s;
}

Rational resultant(const Polynomial& f, const Polynomial& g) {
  return determinant(sylvester_matrix(f, g));
}

Rational discriminant(const Polynomial& f) {
  const int n = f.degree();
  if (n < 2)
    throw std::invalid_argument("discriminant needs degree >= 2");
  Rational r = resultant(f, f.derivative());
  Rational d = r / f.leading();
  if ((n * (n - 1) / 2) % 2 != 0) d = -d;
  return d;
}

CubicData cubic_data(const Polynomial& f) {
  if (f.degree() != 3)
    throw std::invalid_argument("cubic data needs degree exactly 3");
  const Rational &a = f.coeff(0), &b = f.coeff(1), &c = f.coeff(2),
                 &d = f.coeff(3);
  return CubicData{b * b - 3 * a * c, b * c - 9 * a * d, c * c - 3 * b * d};
}

std::vector<Rational> power_sums(const Polynomial& f, int k_max) {
  if (f.is_constant() || f.leading() == 0)
    throw std::invalid_argument("power sums need a nonzero leading coefficient");
  if (k_max < 0) throw std::invalid_argument("k_max must be >= 0");
  const int n = f.degree();

  // Signed elementary symmetric functions e_k = (-1)^k a_k / a0.
  std::vector<Rational> e(static_cast<size_t>(n) + 1);
  e[0] = 1;
  for (int k = 1; k <= n; ++k) {
    e[static_cast<size_t>(k)] = f.coeff(k) / f.leading();
    if (k % 2 != 0) e[static_cast<size_t>(k)] = -e[static_cast<size_t>(k)];
  }

  std::vector<Rational> p(static_cast<size_t>(k_max) + 1);
  p[0] = n;
  for (int k = 1; k <= k_max; ++k) {
    Rational acc(0);
    const int top = k <= n ? k - 1 : n;
    for (int i = 1; i <= top; ++i) {
      Rational term = e[static_cast<size_t>(i)] * p[static_cast<size_t>(k - i)];
      if (i % 2 == 0) acc -= term; else acc += term;
    }
    if (k <= n) {
      Rational tail = Rational(k) * e[static_cast<size_t>(k)];
      if (k % 2 == 0) acc -= tail; else acc += tail;
    }
    p[static_cast<size_t>(k)] = acc;
  }
  return p;
}

Rational delta_squared(const Polynomial& f) {
  const int n = f.degree();
  if (n < 2)
    throw std::invalid_argument("delta squared needs degree >= 2");
  std::vector<Rational> p = power_sums(f, 2 * n - 2);
  RationalMatrix h(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) h.at(i, j) = p[static_cast<size_t>(i + j)];
  return determinant(h);
}

}  // namespace disq
