#ifndef DISQ_REAL_ROOTS_HPP
#define DISQ_REAL_ROOTS_HPP

#include <vector>

#include "disq/polynomial.hpp"

namespace disq {

// An isolating interval. lo == hi marks an exact rational root; otherwise
// the endpoints are guaranteed non-roots with exactly one distinct real
// root strictly between them.
struct Interval {
  Rational lo, hi;
  bool is_point() const { return lo == hi; }
};

struct IsolationResult {
  std::vector<Interval> intervals;  // sorted, pairwise disjoint
  bool multiplicity_flag = false;   // true iff f has a repeated root
};

// Canonical Sturm chain: f, f', then negated remainders down to a constant
// (or to the gcd when f is not squarefree).
std::vector<Polynomial> sturm_sequence(const Polynomial& f);

// Sign variations of the chain at a point / at the infinities.
int sign_variations_at(const std::vector<Polynomial>& chain, const Rational& x);
int sign_variations_at_infinity(const std::vector<Polynomial>& chain,
                                bool positive);

// Distinct real roots of f in (lo, hi]. Endpoints must not be roots.
int count_roots(const Polynomial& f, const Interval& iv);

// Distinct real roots of f on the whole line.
int count_real_roots(const Polynomial& f);

// Isolates every distinct real root of f (isolation runs on the
// square-free part; the flag reports whether f itself has repeated roots).
IsolationResult isolate(const Polynomial& f);

// Refines an interval known to isolate one simple root down to |err| <=
// eps: bisection to a safe width, then Newton with a bracket guard.
// Throws ToleranceNotReached-style std::runtime_error if the iteration
// budget runs out.
double refine(const Polynomial& f, const Interval& iv, double eps);

}  // namespace disq

#endif  // DISQ_REAL_ROOTS_HPP
