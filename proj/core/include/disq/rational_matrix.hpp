#ifndef DISQ_RATIONAL_MATRIX_HPP
#define DISQ_RATIONAL_MATRIX_HPP

#include <vector>

#include "disq/rational.hpp"

namespace disq {

// Dense row-major matrix of exact rationals.
class RationalMatrix {
 public:
  RationalMatrix(int rows, int cols)
      : rows_(rows), cols_(cols), e_(static_cast<size_t>(rows) * cols) {
    if (rows <= 0 || cols <= 0)
      throw std::invalid_argument("matrix dimensions must be positive");
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Rational& at(int i, int j) { return e_[idx(i, j)]; }
  const Rational& at(int i, int j) const { return e_[idx(i, j)]; }

 private:
  size_t idx(int i, int j) const {
    return static_cast<size_t>(i) * cols_ + j;
  }

  int rows_, cols_;
  std::vector<Rational> e_;
};

// Exact determinant. Denominators are cleared row by row, the integer
// matrix is reduced by fraction-free (Bareiss) elimination, and the row
// scales are divided back out. No rounding anywhere.
Rational determinant(const RationalMatrix& m);

}  // namespace disq

#endif  // DISQ_RATIONAL_MATRIX_HPP
