#include "disq/sympoly.hpp"

#include <sstream>
#include <stdexcept>

namespace disq {

namespace {

void check_same_shape(const SymPoly& a, const SymPoly& b) {
  if (a.nvars() != b.nvars())
    throw std::invalid_argument("variable-count mismatch");
}

}  // namespace

SymPoly SymPoly::constant(int nvars, Integer c) {
  SymPoly p(nvars);
  p.add_term(Exponents(static_cast<size_t>(nvars), 0), c);
  return p;
}

SymPoly SymPoly::variable(int nvars, int index, Integer scale) {
  if (index < 0 || index >= nvars)
    throw std::invalid_argument("variable index out of range");
  SymPoly p(nvars);
  Exponents e(static_cast<size_t>(nvars), 0);
  e[static_cast<size_t>(index)] = 1;
  p.add_term(e, scale);
  return p;
}

void SymPoly::add_term(const Exponents& e, const Integer& c) {
  if (c == 0) return;
  if (e.size() != static_cast<size_t>(nvars_))
    throw std::invalid_argument("exponent vector has wrong length");
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

SymPoly SymPoly::operator-() const {
  SymPoly out(nvars_);
  for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
  return out;
}

SymPoly SymPoly::operator+(const SymPoly& o) const {
  check_same_shape(*this, o);
  SymPoly out = *this;
  for (const auto& [e, c] : o.terms_) out.add_term(e, c);
  return out;
}

SymPoly SymPoly::operator-(const SymPoly& o) const {
  check_same_shape(*this, o);
  SymPoly out = *this;
  for (const auto& [e, c] : o.terms_) out.add_term(e, -c);
  return out;
}

SymPoly SymPoly::operator*(const SymPoly& o) const {
  check_same_shape(*this, o);
  SymPoly out(nvars_);
  Exponents e(static_cast<size_t>(nvars_));
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : o.terms_) {
      for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

bool SymPoly::divide_exact(const SymPoly& num, const SymPoly& den,
                           SymPoly& quot) {
  check_same_shape(num, den);
  if (den.is_zero()) throw std::invalid_argument("division by zero SymPoly");
  quot = SymPoly(num.nvars());
  SymPoly rem = num;

  const auto& [de, dc] = *den.terms_.begin();
  Exponents t(static_cast<size_t>(num.nvars()));
  while (!rem.is_zero()) {
    const auto& [re, rc] = *rem.terms_.begin();
    for (size_t i = 0; i < t.size(); ++i) {
      t[i] = re[i] - de[i];
      if (t[i] < 0) return false;
    }
    Integer q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), rc.get_mpz_t(), dc.get_mpz_t());
    if (r != 0) return false;
    quot.add_term(t, q);
    // rem -= (q * a^t) * den
    for (const auto& [e, c] : den.terms_) {
      Exponents s(t.size());
      for (size_t i = 0; i < t.size(); ++i) s[i] = t[i] + e[i];
      rem.add_term(s, -(q * c));
    }
  }
  return true;
}

Rational SymPoly::evaluate(const std::vector<Rational>& values) const {
  if (values.size() != static_cast<size_t>(nvars_))
    throw std::invalid_argument("value list length must match variable count");
  Rational acc(0);
  for (const auto& [e, c] : terms_) {
    Rational term(c);
    for (size_t i = 0; i < e.size(); ++i) {
      for (int k = 0; k < e[i]; ++k) term *= values[i];
    }
    acc += term;
  }
  return acc;
}

SymPoly SymPoly::reversed_variables() const {
  SymPoly out(nvars_);
  for (const auto& [e, c] : terms_) {
    Exponents r(e.rbegin(), e.rend());
    out.add_term(r, c);
  }
  return out;
}

std::string SymPoly::pretty() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Integer mag = abs(c);
    if (first) {
      if (c < 0) out << "-";
      first = false;
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    bool printed = false;
    if (mag != 1) {
      out << mag.get_str();
      printed = true;
    }
    for (size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (printed) out << "*";
      out << "a" << i;
      if (e[i] > 1) out << "^" << e[i];
      printed = true;
    }
    if (!printed) out << "1";
  }
  return out.str();
}

std::string SymPoly::to_json() const {
  std::ostringstream out;
  out << "[";
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) out << ",";
    first = false;
    out << "{\"exponents\":[";
    for (size_t i = 0; i < e.size(); ++i) {
      if (i) out << ",";
      out << e[i];
    }
    out << "],\"coeff\":\"" << c.get_str() << "\"}";
  }
  out << "]";
  return out.str();
}

}  // namespace disq
