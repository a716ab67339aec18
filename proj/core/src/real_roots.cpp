#include "disq/real_roots.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <stdexcept>

namespace disq {

namespace {

int variations(const std::vector<int>& signs) {
  int v = 0;
  int last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++v;
    last = s;
  }
  return v;
}

// Deterministic non-root point near the midpoint of (lo, hi): nudges by
// width/3, width/9, ... until g is nonzero there.
Rational splitting_point(const Polynomial& g, const Rational& lo,
                         const Rational& hi) {
  Rational width = hi - lo;
  Rational m = (lo + hi) / 2;
  Rational step = width / 3;
  for (int tries = 0; tries < 64; ++tries) {
    if (g(m) != 0) return m;
    m += step;
    step /= 3;
  }
  throw std::logic_error("could not find a non-root splitting point");
}

}  // namespace

std::vector<Polynomial> sturm_sequence(const Polynomial& f) {
  if (f.is_zero())
    throw std::invalid_argument("Sturm sequence of the zero polynomial");
  std::vector<Polynomial> chain{f};
  if (f.is_constant()) return chain;
  chain.push_back(f.derivative());
  while (chain.back().degree() > 0) {
    Polynomial rem =
        Polynomial::divmod(chain[chain.size() - 2], chain.back()).second;
    if (rem.is_zero()) break;  // f not squarefree: chain ends at the gcd
    chain.push_back(-rem);
  }
  return chain;
}

int sign_variations_at(const std::vector<Polynomial>& chain,
                       const Rational& x) {
  std::vector<int> signs;
  signs.reserve(chain.size());
  for (const auto& p : chain) signs.push_back(sgn(p(x)));
  return variations(signs);
}

int sign_variations_at_infinity(const std::vector<Polynomial>& chain,
                                bool positive) {
  std::vector<int> signs;
  signs.reserve(chain.size());
  for (const auto& p : chain) {
    int s = sgn(p.leading());
    if (!positive && p.degree() % 2 != 0) s = -s;
    signs.push_back(s);
  }
  return variations(signs);
}

int count_roots(const Polynomial& f, const Interval& iv) {
  if (f.is_zero()) throw std::invalid_argument("zero polynomial");
  if (iv.lo >= iv.hi) throw std::invalid_argument("interval must have lo < hi");
  if (f(iv.lo) == 0 || f(iv.hi) == 0)
    throw std::invalid_argument("interval endpoint is a root; resample it");
  auto chain = sturm_sequence(f);
  return sign_variations_at(chain, iv.lo) - sign_variations_at(chain, iv.hi);
}

int count_real_roots(const Polynomial& f) {
  if (f.is_zero()) throw std::invalid_argument("zero polynomial");
  if (f.is_constant()) return 0;
  auto chain = sturm_sequence(f);
  return sign_variations_at_infinity(chain, false) -
         sign_variations_at_infinity(chain, true);
}

IsolationResult isolate(const Polynomial& f) {
  if (f.is_zero() || f.is_constant())
    throw std::invalid_argument("isolation needs degree >= 1");

  IsolationResult out;
  Polynomial g = squarefree_part(f);
  out.multiplicity_flag = g.degree() != f.degree();

  auto chain = sturm_sequence(g);
  Rational bound = cauchy_root_bound(f);

  struct Span {
    Rational lo, hi;
    int var_lo, var_hi;
  };
  std::deque<Span> work;
  work.push_back({-bound, bound, sign_variations_at(chain, -bound),
                  sign_variations_at(chain, bound)});
  while (!work.empty()) {
    Span s = work.front();
    work.pop_front();
    const int count = s.var_lo - s.var_hi;
    if (count == 0) continue;
    if (count == 1) {
      out.intervals.push_back({s.lo, s.hi});
      continue;
    }
    Rational m = splitting_point(g, s.lo, s.hi);
    int var_m = sign_variations_at(chain, m);
    work.push_back({s.lo, m, s.var_lo, var_m});
    work.push_back({m, s.hi, var_m, s.var_hi});
  }
  std::sort(out.intervals.begin(), out.intervals.end(),
            [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
  return out;
}

double refine(const Polynomial& f, const Interval& iv, double eps) {
  if (!(eps > 0)) throw std::invalid_argument("eps must be positive");
  if (iv.is_point()) return to_double(iv.lo);

  Rational lo = iv.lo, hi = iv.hi;
  int sign_lo = sgn(f(lo));
  if (sign_lo == 0 || sgn(f(hi)) == 0)
    throw std::invalid_argument("interval endpoint is a root");
  if (sign_lo == sgn(f(hi)))
    throw std::invalid_argument("no sign change: interval does not isolate a simple root");

  // Exact bisection until the bracket is comfortably inside Newton's basin.
  const Rational safe_width(1, 1 << 20);
  while (hi - lo > safe_width) {
    Rational m = (lo + hi) / 2;
    int sm = sgn(f(m));
    if (sm == 0) return to_double(m);
    (sm == sign_lo ? lo : hi) = m;
  }

  // Guarded Newton in doubles; every step either contracts the bracket or
  // falls back to bisection, so the width halves at worst.
  const Polynomial fp = f.derivative();
  double dlo = to_double(lo), dhi = to_double(hi);
  double slo = static_cast<double>(sign_lo);
  double x = 0.5 * (dlo + dhi);
  for (int iter = 0; iter < 200; ++iter) {
    if (dhi - dlo <= eps) return 0.5 * (dlo + dhi);
    double fx = f.eval_double(x);
    if (fx == 0.0) return x;
    if (fx * slo > 0) dlo = std::max(dlo, x); else dhi = std::min(dhi, x);
    double dfx = fp.eval_double(x);
    double next = x - fx / dfx;
    if (!std::isfinite(next) || next <= dlo || next >= dhi)
      next = 0.5 * (dlo + dhi);
    if (std::abs(next - x) <= eps * 0.5 &&
        std::abs(f.eval_double(next)) <= std::abs(fx))
      return next;
    x = next;
  }
  throw std::runtime_error("root refinement: tolerance unreachable in iteration budget");
}

}  // namespace disq
