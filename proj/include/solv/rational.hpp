#pragma once

#include <gmpxx.h>

#include <string>

namespace solv {

using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

inline std::string to_string(const Rational& q) { return q.get_str(); }

// Accepts "3", "-2/5" and finite decimals such as "0.25".
Rational parse_rational(const std::string& text);

inline Rational rational_lcm(const Rational& a, const Rational& b) {
  mpz_class l;
  mpz_lcm(l.get_mpz_t(), a.get_den().get_mpz_t(), b.get_den().get_mpz_t());
  return Rational(l);
}

}  // namespace solv
