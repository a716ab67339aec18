#include "disq/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <sstream>
#include <string>
#include <vector>

#include "disq/real_roots.hpp"

namespace disq {

namespace {

double horner(const std::vector<double>& c, double x) {
  double acc = c[0];
  for (size_t i = 1; i < c.size(); ++i) acc = acc * x + c[i];
  return acc;
}

// Divides out (x - r)^m synthetically, dropping the remainders. With r a
// refined root this is numerically benign, and it is what lets the
// singular factor be carried as an exact power of the endpoint distance
// instead of being re-derived from a catastrophically cancelling f(x).
std::vector<double> deflate(std::vector<double> c, double r, int m) {
  for (int round = 0; round < m; ++round) {
    for (size_t i = 1; i + 1 < c.size(); ++i) c[i] += c[i - 1] * r;
    c.pop_back();
  }
  return c;
}

std::vector<double> reversed_coeffs(const std::vector<double>& c) {
  return std::vector<double>(c.rbegin(), c.rend());
}

std::vector<double> negated_argument(const std::vector<double>& c) {
  std::vector<double> out = c;
  const size_t n = out.size() - 1;  // degree
  for (size_t i = 0; i < out.size(); ++i)
    if ((n - i) % 2 != 0) out[i] = -out[i];
  return out;
}

struct RefinedRoot {
  double r;
  int mult;
};

// Exact multiplicity structure, then double-precision root locations.
std::vector<RefinedRoot> real_root_structure(const Polynomial& f, int n) {
  std::vector<RefinedRoot> roots;
  for (const auto& [factor, mult] : squarefree_decomposition(f)) {
    if (factor.degree() == 0) continue;
    IsolationResult iso = isolate(factor);
    if (iso.intervals.empty()) continue;
    if (2 * mult >= n) {
      double where = refine(factor, iso.intervals.front(), 1e-6);
      throw RepeatedRootDivergence(where, mult, n);
    }
    for (const auto& iv : iso.intervals) {
      double hint = std::abs(to_double(iv.hi)) + std::abs(to_double(iv.lo));
      double eps = std::max(1e-14, hint * 4e-16);
      roots.push_back({refine(factor, iv, eps), mult});
    }
  }
  std::sort(roots.begin(), roots.end(),
            [](const RefinedRoot& a, const RefinedRoot& b) { return a.r < b.r; });
  return roots;
}

struct Piece {
  double a, b;
  int singular_end;  // -1 none, 0 at a, 1 at b
  int root_index;
};

// Real critical points of p strictly inside (lo, hi). Away from its real
// roots, |p| can only dip where p' vanishes, so these are exactly the
// places where a complex pair close to the axis pinches the integrand;
// splitting there turns interior spikes into endpoint boundary layers,
// which the double-exponential transform resolves.
std::vector<double> interior_dips(const Polynomial& p, double lo, double hi) {
  std::vector<double> out;
  if (p.degree() < 2) return out;
  Polynomial dp = p.derivative();
  if (dp.degree() < 1) return out;
  Polynomial sf = squarefree_part(dp);
  for (const auto& iv : isolate(dp).intervals) {
    double hint = std::abs(to_double(iv.hi)) + std::abs(to_double(iv.lo));
    double c = refine(sf, iv, std::max(1e-12, hint * 1e-13));
    const double margin = 1e-9 * (1.0 + std::abs(c));
    if (c > lo + margin && c < hi - margin) out.push_back(c);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Inserts extra breakpoints, skipping any that collide with existing ones.
void merge_breakpoints(std::vector<double>& points,
                       const std::vector<double>& extra) {
  for (double c : extra) {
    auto it = std::lower_bound(points.begin(), points.end(), c);
    const double margin = 1e-10 * (1.0 + std::abs(c));
    if (it != points.end() && *it - c < margin) continue;
    if (it != points.begin() && c - *(it - 1) < margin) continue;
    points.insert(it, c);
  }
}

class PowerIntegrand {
 public:
  PowerIntegrand(const Polynomial& f, int n,
                 const std::vector<RefinedRoot>& roots)
      : p_(2.0 / n), coeffs_(f.coeffs_double()) {
    deflated_.reserve(roots.size());
    mult_exp_.reserve(roots.size());
    for (const auto& root : roots) {
      deflated_.push_back(deflate(coeffs_, root.r, root.mult));
      mult_exp_.push_back(2.0 * root.mult / n);
    }
  }

  double plain(double x) const {
    return std::pow(std::abs(horner(coeffs_, x)), -p_);
  }

  // |dist|^(-2m/n) * |f(x)/(x-r)^m|^(-2/n) near root i.
  double near_root(int i, double x, double dist) const {
    return std::pow(dist, -mult_exp_[static_cast<size_t>(i)]) *
           std::pow(std::abs(horner(deflated_[static_cast<size_t>(i)], x)), -p_);
  }

  double exponent() const { return p_; }
  const std::vector<double>& coeffs() const { return coeffs_; }

 private:
  double p_;
  std::vector<double> coeffs_;
  std::vector<std::vector<double>> deflated_;
  std::vector<double> mult_exp_;
};

IntegralResult integrate_abs_power(const Polynomial& f, int n,
                                   const IntegrateOptions& opt) {
  const std::vector<RefinedRoot> roots = real_root_structure(f, n);
  const PowerIntegrand integrand(f, n, roots);

  // delta-collar around each root: min(1, half-gap to the neighbors).
  std::vector<double> delta(roots.size(), 1.0);
  for (size_t i = 0; i < roots.size(); ++i) {
    if (i > 0) delta[i] = std::min(delta[i], 0.5 * (roots[i].r - roots[i - 1].r));
    if (i + 1 < roots.size())
      delta[i] = std::min(delta[i], 0.5 * (roots[i + 1].r - roots[i].r));
  }

  const double edge =
      roots.empty()
          ? 1.0
          : std::max(std::abs(roots.front().r), std::abs(roots.back().r)) + 1.0;

  // Breakpoints: edges, the root collars, and every interior |f| dip.
  std::vector<double> points{-edge};
  for (size_t i = 0; i < roots.size(); ++i) {
    const double r = roots[i].r;
    for (double c : {r - delta[i], r, r + delta[i]})
      if (c > points.back()) points.push_back(c);
  }
  if (edge > points.back()) points.push_back(edge);
  merge_breakpoints(points, interior_dips(f, -edge, edge));

  std::vector<Piece> pieces;
  for (size_t i = 0; i + 1 < points.size(); ++i) {
    Piece piece{points[i], points[i + 1], -1, -1};
    for (size_t k = 0; k < roots.size(); ++k) {
      if (points[i] == roots[k].r) {
        piece.singular_end = 0;
        piece.root_index = static_cast<int>(k);
      } else if (points[i + 1] == roots[k].r) {
        piece.singular_end = 1;
        piece.root_index = static_cast<int>(k);
      }
    }
    pieces.push_back(piece);
  }

  // Tail sub-splits: the inverted integrand |rev(f)(t)|^(-2/n) can dip
  // where a complex root of f sits near the real axis beyond the edge.
  const std::vector<double> rev = reversed_coeffs(integrand.coeffs());
  const std::vector<double> rev_neg =
      reversed_coeffs(negated_argument(integrand.coeffs()));
  auto tail_splits = [&](const std::vector<double>& c) {
    std::vector<Rational> exact;
    bool leading = true;
    for (double v : c) {
      if (leading && v == 0.0) continue;
      leading = false;
      exact.emplace_back(v);
    }
    std::vector<double> pts{0.0, 1.0 / edge};
    if (exact.size() >= 3)
      merge_breakpoints(pts, interior_dips(Polynomial(exact), 0.0, 1.0 / edge));
    return pts;
  };

  const std::vector<double> left_tail_pts = tail_splits(rev_neg);
  const std::vector<double> right_tail_pts = tail_splits(rev);
  const int total_pieces =
      static_cast<int>(pieces.size() + left_tail_pts.size() +
                       right_tail_pts.size()) - 2;
  TanhSinhOptions piece_opt;
  piece_opt.tol = opt.tol / (4.0 * total_pieces);
  piece_opt.max_level = opt.max_level;

  IntegralResult out;
  double sum = 0.0, comp = 0.0;
  auto add = [&](const TanhSinhResult& r) {
    double y = r.value - comp;
    double t = sum + y;
    comp = (t - sum) - y;
    sum = t;
    out.abs_error_estimate += r.error;
    out.levels_used = std::max(out.levels_used, r.levels);
    ++out.pieces;
  };

  const double p = integrand.exponent();
  auto tail = [&](const std::vector<double>& c, const std::vector<double>& pts) {
    for (size_t i = 0; i + 1 < pts.size(); ++i)
      add(tanh_sinh_integrate(
          [&](double t) { return std::pow(std::abs(horner(c, t)), -p); },
          pts[i], pts[i + 1], piece_opt));
  };

  // Left tail, bounded pieces left to right, right tail: fixed order, so
  // results are reproducible regardless of any caller-side concurrency.
  tail(rev_neg, left_tail_pts);
  for (const Piece& piece : pieces) {
    TanhSinhResult r;
    if (piece.singular_end < 0) {
      r = tanh_sinh_integrate([&](double x) { return integrand.plain(x); },
                              piece.a, piece.b, piece_opt);
    } else if (piece.singular_end == 0) {
      r = tanh_sinh_integrate(
          [&](double x, double da, double) {
            return integrand.near_root(piece.root_index, x, da);
          },
          piece.a, piece.b, piece_opt);
    } else {
      r = tanh_sinh_integrate(
          [&](double x, double, double db) {
            return integrand.near_root(piece.root_index, x, db);
          },
          piece.a, piece.b, piece_opt);
    }
    add(r);
  }
  tail(rev, right_tail_pts);

  out.value = sum;
  // The contract is on the aggregate estimate; individual pieces may stop
  // at the level cap as long as the total still meets the tolerance.
  if (out.abs_error_estimate > opt.tol * std::max(1.0, std::abs(out.value)))
    throw ToleranceNotReached(out);
  if (!std::isfinite(out.value))
    throw QuadratureError("integral evaluated to a non-finite value");
  return out;
}

}  // namespace

RepeatedRootDivergence::RepeatedRootDivergence(double root, int multiplicity,
                                               int n)
    : QuadratureError([&] {
        std::ostringstream msg;
        msg << "real root near " << root << " has multiplicity "
            << multiplicity << " >= n/2 with n = " << n
            << ": the integral diverges";
        return msg.str();
      }()),
      root_(root),
      multiplicity_(multiplicity) {}

ToleranceNotReached::ToleranceNotReached(const IntegralResult& partial)
    : QuadratureError("level cap reached before the requested tolerance"),
      partial_(partial) {}

int IntegrateOptions::default_max_level() {
  static const int cached = [] {
    if (const char* env = std::getenv("DISQ_MAX_LEVEL")) {
      char* end = nullptr;
      long v = std::strtol(env, &end, 10);
      if (end != env && *end == '\0') return static_cast<int>(std::clamp(v, 2L, 24L));
    }
    return 12;
  }();
  return cached;
}

IntegralResult integrate_power(const Polynomial& f, int n, double tol) {
  IntegrateOptions opt;
  opt.tol = tol;
  return integrate_power(f, n, opt);
}

IntegralResult integrate_power(const Polynomial& f, int n,
                               const IntegrateOptions& opt) {
  if (n < 3)
    throw std::invalid_argument("integrate_power needs degree n >= 3");
  if (f.degree() != n)
    throw std::invalid_argument("declared n must equal the polynomial degree");
  if (!(opt.tol >= 1e-13 && opt.tol <= 1e-4))
    throw std::invalid_argument("tol must lie in [1e-13, 1e-4]");
  return integrate_abs_power(f, n, opt);
}

std::pair<double, double> gaussian_check(double a, double b, double c) {
  return gaussian_check(a, b, c, 1e-11);
}

std::pair<double, double> gaussian_check(double a, double b, double c,
                                         double tol) {
  if (!(a > 0)) throw std::invalid_argument("gaussian check needs a > 0");
  const double disc = b * b - 4.0 * a * c;
  if (!(disc < 0))
    throw std::invalid_argument("gaussian check needs b^2 - 4ac < 0");
  IntegrateOptions opt;
  opt.tol = tol;
  Polynomial quadratic({Rational(a), Rational(b), Rational(c)});
  const double numeric = integrate_abs_power(quadratic, 2, opt).value;
  const double closed_form = 2.0 * 3.14159265358979323846 / std::sqrt(-disc);
  return {numeric, closed_form};
}

}  // namespace disq
