#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace symcon {

// Exact rational arithmetic backed by GMP. mpq_class keeps values
// canonical (reduced, positive denominator) after every operation.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational make_rational(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline Rational from_u64(std::uint64_t v) {
  Integer z;
  mpz_import(z.get_mpz_t(), 1, 1, sizeof(v), 0, 0, &v);
  return Rational(z);
}

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

// "3", "-1/2".
inline std::string to_string(const Rational& r) { return r.get_str(); }

// Parses "a" or "a/b"; throws std::invalid_argument on bad input.
Rational parse_rational(const std::string& text);

}  // namespace symcon
