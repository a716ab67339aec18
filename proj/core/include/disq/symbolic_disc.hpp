#ifndef DISQ_SYMBOLIC_DISC_HPP
#define DISQ_SYMBOLIC_DISC_HPP

#include <string>
#include <vector>

#include "disq/sympoly.hpp"

namespace disq {

// Square matrix of SymPoly entries, row-major.
struct SymMatrix {
  int rows = 0, cols = 0;
  std::vector<SymPoly> entries;

  const SymPoly& at(int i, int j) const {
    return entries[static_cast<size_t>(i) * cols + j];
  }
  SymPoly& at(int i, int j) {
    return entries[static_cast<size_t>(i) * cols + j];
  }
};

// The (2n-1)x(2n-1) Sylvester matrix of the general degree-n polynomial
// f = a0 x^n + ... + a_n and its derivative, over the variables a0..a_n:
// n-1 shifted coefficient rows of f, then n shifted rows of f' whose
// entries are (n-k) a_k.
SymMatrix sym_sylvester(int n);

// Fully expanded determinant by fraction-free elimination with exact
// polynomial division.
SymPoly sym_determinant(const SymMatrix& m);

// The general discriminant D_n = (-1)^(n(n-1)/2) R(f, f') / a0 as a
// canonical SymPoly in a0..a_n. The division by a0 must be remainder-free;
// anything else aborts, since it can only mean an expansion bug.
SymPoly sym_discriminant(int n, int degree_cap = 6);

// Structural diff of two SymPoly values over the same variables.
struct SymDiffEntry {
  Exponents exponents;
  Integer lhs, rhs;  // zero on the side where the monomial is absent
};
struct SymDiff {
  std::vector<SymDiffEntry> entries;
  bool empty() const { return entries.empty(); }
  std::string format() const;
};
SymDiff compare_to_reference(const SymPoly& p, const SymPoly& reference);

}  // namespace disq

#endif  // DISQ_SYMBOLIC_DISC_HPP
