#ifndef PERIODS_RATIONAL_HPP
#define PERIODS_RATIONAL_HPP

#include <gmpxx.h>

#include <string>

#include "periods/errors.hpp"

namespace periods {

// Exact arbitrary-precision rational. All arithmetic in this project is
// exact; there is no floating point on any verification path.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational make_rational(long num, long den = 1) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

// Canonical "num/den" form, denominator always present ("3/1", "-2/5").
inline std::string rational_to_string(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

// Accepts "num/den" or a bare integer string.
inline Rational rational_from_string(const std::string& s) {
  Rational q;
  if (q.set_str(s, 10) != 0) throw ValidationError("bad rational literal: " + s);
  q.canonicalize();
  return q;
}

// Integer power with negative exponents via exact inversion.
inline Rational rational_pow(const Rational& base, long exp) {
  if (exp == 0) return Rational(1);
  if (base == 0 && exp < 0) throw ZeroMinorError("division by zero in rational_pow");
  Rational acc(1);
  Rational b = exp > 0 ? base : Rational(1) / base;
  for (long i = 0, n = exp > 0 ? exp : -exp; i < n; ++i) acc *= b;
  return acc;
}

}  // namespace periods

#endif
