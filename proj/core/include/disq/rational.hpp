#ifndef DISQ_RATIONAL_HPP
#define DISQ_RATIONAL_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace disq {

// Exact arithmetic substrate. All algebra upstream of the quadrature
// boundary runs on these types; conversion to double happens exactly once,
// at that boundary.
using Integer = mpz_class;
using Rational = mpq_class;

// Parses "p", "-p" or "p/q" into a canonical rational.
inline Rational rational_from_string(const std::string& s) {
  Rational q;
  if (mpq_set_str(q.get_mpq_t(), s.c_str(), 10) != 0)
    throw std::invalid_argument("not a rational: '" + s + "'");
  if (q.get_den() == 0)
    throw std::invalid_argument("zero denominator: '" + s + "'");
  q.canonicalize();
  return q;
}

// Canonical "p" / "p/q" form (the polynomial JSON coefficient format).
inline std::string to_string(const Rational& q) { return q.get_str(); }

inline double to_double(const Rational& q) { return q.get_d(); }

inline int sign(const Rational& q) { return sgn(q); }

}  // namespace disq

#endif  // DISQ_RATIONAL_HPP
