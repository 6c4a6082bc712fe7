#pragma once

#include <gmpxx.h>

#include <string>

namespace mo {

// Exact arithmetic throughout: mpz for counts, mpq for polynomial coefficients.
// mpq_class keeps values canonical (denominator > 0, gcd(|num|, den) = 1).
using Int = mpz_class;
using Rat = mpq_class;

// GMP's classes take long, not long long; the engine's values fit in long.
inline Int make_int(long long v) { return Int(static_cast<long>(v)); }

inline Rat make_rat(long long num, long long den = 1) {
  Rat q(static_cast<long>(num), static_cast<long>(den));
  q.canonicalize();
  return q;
}

// "p/q" with "/q" omitted when q == 1.
inline std::string rat_to_string(const Rat& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

}  // namespace mo
