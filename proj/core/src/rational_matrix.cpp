#include "disq/rational_matrix.hpp"

#include <stdexcept>
#include <utility>
#include <vector>

namespace disq {

namespace {

// Bareiss elimination on an integer matrix. Every division below is exact
// (Sylvester's identity), so entries stay integers of minor size instead of
// blowing up the way naive cross-multiplication does.
Integer bareiss_determinant(std::vector<std::vector<Integer>>& m) {
  const size_t n = m.size();
  Integer prev(1);
  int sign = 1;
  for (size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      size_t swap_row = k + 1;
      while (swap_row < n && m[swap_row][k] == 0) ++swap_row;
      if (swap_row == n) return Integer(0);
      std::swap(m[k], m[swap_row]);
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i) {
      for (size_t j = k + 1; j < n; ++j) {
        Integer t = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      m[i][k] = 0;
    }
    prev = m[k][k];
  }
  return sign > 0 ? m[n - 1][n - 1] : Integer(-m[n - 1][n - 1]);
}

}  // namespace

Rational determinant(const RationalMatrix& mat) {
  if (!mat.is_square())
    throw std::invalid_argument("determinant needs a square matrix");
  const int n = mat.rows();

  std::vector<std::vector<Integer>> z(static_cast<size_t>(n),
                                      std::vector<Integer>(static_cast<size_t>(n)));
  Integer scale(1);
  for (int i = 0; i < n; ++i) {
    Integer row_lcm(1);
    for (int j = 0; j < n; ++j)
      mpz_lcm(row_lcm.get_mpz_t(), row_lcm.get_mpz_t(),
              mat.at(i, j).get_den_mpz_t());
    for (int j = 0; j < n; ++j) {
      const Rational& q = mat.at(i, j);
      Integer f = row_lcm / Integer(q.get_den());
      z[static_cast<size_t>(i)][static_cast<size_t>(j)] = Integer(q.get_num()) * f;
    }
    scale *= row_lcm;
  }

  Rational det(bareiss_determinant(z), scale);
  det.canonicalize();
  return det;
}

}  // namespace disq
