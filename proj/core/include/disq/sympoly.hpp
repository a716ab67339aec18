#ifndef DISQ_SYMPOLY_HPP
#define DISQ_SYMPOLY_HPP

#include <map>
#include <string>
#include <vector>

#include "disq/rational.hpp"

namespace disq {

// Exponent vector over the variables a0..a_n (one slot per variable).
using Exponents = std::vector<int>;

// Graded-lexicographic order, leading terms first: higher total degree
// wins, ties broken lexicographically with a0 taking highest precedence.
struct GradedLexBefore {
  bool operator()(const Exponents& x, const Exponents& y) const {
    int dx = 0, dy = 0;
    for (int e : x) dx += e;
    for (int e : y) dy += e;
    if (dx != dy) return dx > dy;
    return x > y;  // lexicographic, a0 first
  }
};

// Sparse multivariate polynomial with integer coefficients over a0..a_n.
// No stored term has a zero coefficient, and iteration follows the
// graded-lex order above, so equal polynomials are structurally identical.
class SymPoly {
 public:
  using TermMap = std::map<Exponents, Integer, GradedLexBefore>;

  explicit SymPoly(int nvars) : nvars_(nvars) {
    if (nvars <= 0) throw std::invalid_argument("need at least one variable");
  }

  static SymPoly constant(int nvars, Integer c);
  static SymPoly variable(int nvars, int index, Integer scale = Integer(1));

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  size_t term_count() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }

  // Accumulates c * a^e; erases the term if the sum cancels.
  void add_term(const Exponents& e, const Integer& c);

  SymPoly operator-() const;
  SymPoly operator+(const SymPoly& o) const;
  SymPoly operator-(const SymPoly& o) const;
  SymPoly operator*(const SymPoly& o) const;
  bool operator==(const SymPoly& o) const {
    return nvars_ == o.nvars_ && terms_ == o.terms_;
  }

  // Exact division: returns false (and leaves quot empty) if den does not
  // divide num in Z[a0..a_n].
  static bool divide_exact(const SymPoly& num, const SymPoly& den,
                           SymPoly& quot);

  // Exact substitution a_i := values[i].
  Rational evaluate(const std::vector<Rational>& values) const;

  // a_k -> a_{n-k}.
  SymPoly reversed_variables() const;

  // Human-readable monomials in canonical order, e.g. "a1^2 - 4*a0*a2".
  std::string pretty() const;

  // The sorted JSON list form: [{"exponents":[...],"coeff":"..."}, ...].
  std::string to_json() const;

 private:
  int nvars_;
  TermMap terms_;
};

}  // namespace disq

#endif  // DISQ_SYMPOLY_HPP
