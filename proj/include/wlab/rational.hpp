#pragma once

#include <gmpxx.h>

#include <string>

namespace wlab {

// Exact rational scalar. GMP keeps values canonical (reduced, positive
// denominator); helpers that build one from raw parts canonicalize.
using Rat = mpq_class;
using Int = mpz_class;

inline Rat rat(long num, long den = 1) {
  Rat q(num, den);
  q.canonicalize();
  return q;
}

inline bool is_zero(const Rat& q) { return sgn(q) == 0; }

// Accepts "p", "p/q", optional leading sign, base 10 only.
Rat rat_from_string(const std::string& s);

// Canonical text form: "p" for integers, "p/q" otherwise.
std::string rat_to_string(const Rat& q);

Rat rat_pow(const Rat& base, long e);

}  // namespace wlab
