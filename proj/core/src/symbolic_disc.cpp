#include "disq/symbolic_disc.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace disq {

SymMatrix sym_sylvester(int n) {
  if (n < 2) throw std::invalid_argument("sym_sylvester needs n >= 2");
  const int nvars = n + 1;
  const int dim = 2 * n - 1;
  SymMatrix m;
  m.rows = m.cols = dim;
  m.entries.assign(static_cast<size_t>(dim) * dim, SymPoly(nvars));
  for (int r = 0; r < n - 1; ++r)
    for (int k = 0; k <= n; ++k)
      m.at(r, r + k) = SymPoly::variable(nvars, k);
  for (int r = 0; r < n; ++r)
    for (int k = 0; k < n; ++k)
      m.at(n - 1 + r, r + k) = SymPoly::variable(nvars, k, Integer(n - k));
  return m;
}

SymPoly sym_determinant(const SymMatrix& m) {
  if (m.rows != m.cols || m.rows == 0)
    throw std::invalid_argument("sym_determinant needs a square matrix");
  const int n = m.rows;
  const int nvars = m.entries.front().nvars();

  std::vector<SymPoly> w = m.entries;
  auto at = [&](int i, int j) -> SymPoly& {
    return w[static_cast<size_t>(i) * n + j];
  };

  SymPoly prev = SymPoly::constant(nvars, 1);
  int sign = 1;
  for (int k = 0; k + 1 < n; ++k) {
    if (at(k, k).is_zero()) {
      int swap_row = k + 1;
      while (swap_row < n && at(swap_row, k).is_zero()) ++swap_row;
      if (swap_row == n) return SymPoly(nvars);
      for (int j = 0; j < n; ++j) std::swap(at(k, j), at(swap_row, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        SymPoly t = at(i, j) * at(k, k) - at(i, k) * at(k, j);
        SymPoly q(nvars);
        if (!SymPoly::divide_exact(t, prev, q))
          throw std::logic_error(
              "fraction-free elimination: inexact division (pivot bug)");
        at(i, j) = std::move(q);
      }
      at(i, k) = SymPoly(nvars);
    }
    prev = at(k, k);
  }
  SymPoly det = at(n - 1, n - 1);
  return sign > 0 ? det : -det;
}

SymPoly sym_discriminant(int n, int degree_cap) {
  if (n < 2) throw std::invalid_argument("sym_discriminant needs n >= 2");
  if (n > degree_cap)
    throw std::invalid_argument("degree exceeds configured cap");
  SymPoly res = sym_determinant(sym_sylvester(n));
  SymPoly a0 = SymPoly::variable(n + 1, 0);
  SymPoly d(n + 1);
  if (!SymPoly::divide_exact(res, a0, d))
    throw std::logic_error("resultant not divisible by a0 (expansion bug)");
  if ((n * (n - 1) / 2) % 2 != 0) d = -d;
  return d;
}

SymDiff compare_to_reference(const SymPoly& p, const SymPoly& reference) {
  if (p.nvars() != reference.nvars())
    throw std::invalid_argument("variable-count mismatch");
  SymDiff diff;
  auto it = p.terms().begin();
  auto jt = reference.terms().begin();
  GradedLexBefore before;
  while (it != p.terms().end() || jt != reference.terms().end()) {
    if (jt == reference.terms().end() ||
        (it != p.terms().end() && before(it->first, jt->first))) {
      diff.entries.push_back({it->first, it->second, Integer(0)});
      ++it;
    } else if (it == p.terms().end() || before(jt->first, it->first)) {
      diff.entries.push_back({jt->first, Integer(0), jt->second});
      ++jt;
    } else {
      if (it->second != jt->second)
        diff.entries.push_back({it->first, it->second, jt->second});
      ++it;
      ++jt;
    }
  }
  return diff;
}

std::string SymDiff::format() const {
  if (entries.empty()) return "(no differences)";
  std::ostringstream out;
  for (const auto& d : entries) {
    out << "monomial [";
    for (size_t i = 0; i < d.exponents.size(); ++i) {
      if (i) out << ",";
      out << d.exponents[i];
    }
    out << "] lhs=" << d.lhs.get_str() << " rhs=" << d.rhs.get_str() << "\n";
  }
  return out.str();
}

}  // namespace disq
