#ifndef DISQ_EXACT_POLY_HPP
#define DISQ_EXACT_POLY_HPP

#include <vector>

#include "disq/polynomial.hpp"
#include "disq/rational_matrix.hpp"

namespace disq {

inline Polynomial derivative(const Polynomial& f) { return f.derivative(); }

// Sylvester matrix of f (degree n) and g (degree m): the (n+m)x(n+m)
// banded matrix whose first m rows carry the shifted coefficients of f and
// whose last n rows carry those of g, highest degree first.
RationalMatrix sylvester_matrix(const Polynomial& f, const Polynomial& g);

// det of the Sylvester matrix.
Rational resultant(const Polynomial& f, const Polynomial& g);

// D = (-1)^(n(n-1)/2) * R(f, f') / a0 for degree n >= 2. Vanishes exactly
// when f has a repeated root.
Rational discriminant(const Polynomial& f);

// The three combinations A = b^2 - 3ac, B = bc - 9ad, C = c^2 - 3bd of a
// cubic ax^3 + bx^2 + cx + d; they satisfy B^2 - 4AC = -3D.
struct CubicData {
  Rational A, B, C;
};
CubicData cubic_data(const Polynomial& f);

// Power sums p_0..p_kmax of the roots, computed from the coefficients by
// Newton's identities; no root is ever extracted. p_0 = degree.
std::vector<Rational> power_sums(const Polynomial& f, int k_max);

// Delta^2 = det[p_{i+j}]_{0<=i,j<n}, the Hankel determinant of the power
// sums (the squared Vandermonde of the roots). Satisfies
// discriminant(f) == leading^(2n-2) * delta_squared(f).
Rational delta_squared(const Polynomial& f);

}  // namespace disq

#endif  // DISQ_EXACT_POLY_HPP
