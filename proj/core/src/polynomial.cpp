#include "disq/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace disq {

Polynomial::Polynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
  if (c_.empty()) throw std::invalid_argument("polynomial needs coefficients");
  if (c_.size() > 1 && c_.front() == 0)
    throw std::invalid_argument(
        "leading coefficient is zero; pass the true-degree coefficient list");
}

Polynomial Polynomial::from_ints(std::initializer_list<long> coeffs) {
  std::vector<Rational> c;
  c.reserve(coeffs.size());
  for (long v : coeffs) c.emplace_back(v);
  return Polynomial(std::move(c));
}

Polynomial Polynomial::from_ints(const std::vector<long>& coeffs) {
  std::vector<Rational> c;
  c.reserve(coeffs.size());
  for (long v : coeffs) c.emplace_back(v);
  return Polynomial(std::move(c));
}

Polynomial Polynomial::monomial(int k, Rational scale) {
  if (k < 0) throw std::invalid_argument("monomial degree must be >= 0");
  if (scale == 0) return Polynomial();
  std::vector<Rational> c(static_cast<size_t>(k) + 1, Rational(0));
  c[0] = std::move(scale);
  return Polynomial(std::move(c), Raw{});
}

Polynomial Polynomial::normalized(std::vector<Rational> coeffs) {
  size_t lead = 0;
  while (lead + 1 < coeffs.size() && coeffs[lead] == 0) ++lead;
  if (lead > 0) coeffs.erase(coeffs.begin(), coeffs.begin() + lead);
  if (coeffs.empty()) coeffs.emplace_back(0);
  return Polynomial(std::move(coeffs), Raw{});
}

Rational Polynomial::operator()(const Rational& x) const {
  Rational acc = c_[0];
  for (size_t i = 1; i < c_.size(); ++i) acc = acc * x + c_[i];
  return acc;
}

double Polynomial::eval_double(double x) const {
  double acc = c_[0].get_d();
  for (size_t i = 1; i < c_.size(); ++i) acc = acc * x + c_[i].get_d();
  return acc;
}

Polynomial Polynomial::operator-() const {
  std::vector<Rational> c = c_;
  for (auto& v : c) v = -v;
  return Polynomial(std::move(c), Raw{});
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  const auto& longer = c_.size() >= o.c_.size() ? c_ : o.c_;
  const auto& shorter = c_.size() >= o.c_.size() ? o.c_ : c_;
  std::vector<Rational> c = longer;
  size_t off = longer.size() - shorter.size();
  for (size_t i = 0; i < shorter.size(); ++i) c[off + i] += shorter[i];
  return normalized(std::move(c));
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  return *this + (-o);
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  if (is_zero() || o.is_zero()) return Polynomial();
  std::vector<Rational> c(c_.size() + o.c_.size() - 1, Rational(0));
  for (size_t i = 0; i < c_.size(); ++i)
    for (size_t j = 0; j < o.c_.size(); ++j) c[i + j] += c_[i] * o.c_[j];
  return Polynomial(std::move(c), Raw{});
}

Polynomial Polynomial::operator*(const Rational& s) const {
  if (s == 0 || is_zero()) return Polynomial();
  std::vector<Rational> c = c_;
  for (auto& v : c) v *= s;
  return Polynomial(std::move(c), Raw{});
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& num,
                                                     const Polynomial& den) {
  if (den.is_zero()) throw std::invalid_argument("division by zero polynomial");
  if (num.is_zero() || num.degree() < den.degree())
    return {Polynomial(), num};
  std::vector<Rational> rem = num.c_;
  const int dq = num.degree() - den.degree();
  std::vector<Rational> quot(static_cast<size_t>(dq) + 1, Rational(0));
  for (int k = 0; k <= dq; ++k) {
    Rational q = rem[static_cast<size_t>(k)] / den.leading();
    quot[static_cast<size_t>(k)] = q;
    if (q == 0) continue;
    for (int j = 0; j <= den.degree(); ++j)
      rem[static_cast<size_t>(k + j)] -= q * den.coeff(j);
  }
  rem.erase(rem.begin(), rem.begin() + dq + 1);
  return {normalized(std::move(quot)), normalized(std::move(rem))};
}

Polynomial Polynomial::derivative() const {
  if (is_constant()) return Polynomial();
  const int n = degree();
  std::vector<Rational> c(static_cast<size_t>(n), Rational(0));
  for (int k = 0; k < n; ++k) c[static_cast<size_t>(k)] = Rational(n - k) * c_[static_cast<size_t>(k)];
  return normalized(std::move(c));
}

Polynomial Polynomial::translated(const Rational& t) const {
  // Horner form of f(x + t): fold coefficients into an accumulator
  // polynomial, multiplying by (x + t) at each step.
  Polynomial acc = Polynomial::monomial(0, c_[0]);
  Polynomial shift({Rational(1), t});
  for (size_t i = 1; i < c_.size(); ++i)
    acc = acc * shift + Polynomial::monomial(0, c_[i]);
  return acc;
}

Polynomial Polynomial::scaled_x(const Rational& s) const {
  if (s == 0) throw std::invalid_argument("scale factor must be nonzero");
  std::vector<Rational> c = c_;
  Rational p(1);
  const int n = degree();
  for (int i = n; i >= 0; --i) {
    c[static_cast<size_t>(i)] *= p;
    p *= s;
  }
  return Polynomial(std::move(c), Raw{});
}

Polynomial Polynomial::reversed() const {
  if (constant_term() == 0)
    throw std::invalid_argument(
        "reversal needs a nonzero constant term (degree would drop)");
  std::vector<Rational> c(c_.rbegin(), c_.rend());
  return Polynomial(std::move(c), Raw{});
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  return *this * (Rational(1) / leading());
}

std::vector<double> Polynomial::coeffs_double() const {
  std::vector<double> c;
  c.reserve(c_.size());
  for (const auto& v : c_) c.push_back(v.get_d());
  return c;
}

std::string Polynomial::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  const int n = degree();
  for (int i = 0; i <= n; ++i) {
    const Rational& a = c_[static_cast<size_t>(i)];
    if (a == 0) continue;
    Rational mag = abs(a);
    if (first) {
      if (sgn(a) < 0) out << "-";
      first = false;
    } else {
      out << (sgn(a) < 0 ? " - " : " + ");
    }
    const int k = n - i;
    if (mag != 1 || k == 0) out << mag.get_str();
    if (k > 0) {
      if (mag != 1) out << "*";
      out << "x";
      if (k > 1) out << "^" << k;
    }
  }
  return out.str();
}

Polynomial poly_gcd(const Polynomial& a, const Polynomial& b) {
  Polynomial r0 = a, r1 = b;
  if (r0.is_zero()) return r1.monic();
  if (r1.is_zero()) return r0.monic();
  if (r0.degree() < r1.degree()) std::swap(r0, r1);
  while (!r1.is_zero()) {
    Polynomial rem = Polynomial::divmod(r0, r1).second;
    r0 = std::move(r1);
    r1 = rem.is_zero() ? rem : rem.monic();  // keep coefficients small
  }
  return r0.monic();
}

std::vector<std::pair<Polynomial, int>> squarefree_decomposition(
    const Polynomial& f) {
  std::vector<std::pair<Polynomial, int>> out;
  if (f.is_constant()) return out;
  // Yun's algorithm over Q[x].
  Polynomial fp = f.derivative();
  Polynomial g = poly_gcd(f, fp);
  Polynomial w = Polynomial::divmod(f, g).first;
  Polynomial y = Polynomial::divmod(fp, g).first;
  Polynomial z = y - w.derivative();
  int m = 1;
  while (!z.is_zero()) {
    Polynomial u = poly_gcd(w, z);
    if (u.degree() > 0) out.emplace_back(u, m);
    w = Polynomial::divmod(w, u).first;
    y = Polynomial::divmod(z, u).first;
    z = y - w.derivative();
    ++m;
  }
  if (w.degree() > 0) out.emplace_back(w.monic(), m);
  return out;
}

Polynomial squarefree_part(const Polynomial& f) {
  if (f.is_constant()) return f;
  Polynomial g = poly_gcd(f, f.derivative());
  if (g.degree() == 0) return f.monic();
  return Polynomial::divmod(f, g).first.monic();
}

Rational cauchy_root_bound(const Polynomial& f) {
  if (f.is_constant()) return Rational(1);
  Rational m(0);
  for (int i = 1; i <= f.degree(); ++i) {
    Rational v = abs(f.coeff(i) / f.leading());
    if (v > m) m = v;
  }
  return m + 1;
}

}  // namespace disq
