#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace rgal {

using Int = mpz_class;
using Rat = mpq_class;

// Serialized as "p/q" (q > 1) or "p" (q = 1).
std::string rat_string(const Rat& q);
Rat parse_rat(const std::string& s);

inline Rat make_rat(const Int& num, const Int& den) {
  if (den == 0) throw std::invalid_argument("make_rat: zero denominator");
  Rat q(num, den);
  q.canonicalize();
  return q;
}

inline Rat make_rat(long num, long den = 1) {
  return make_rat(Int(num), Int(den));
}

Int pow_int(const Int& base, unsigned long e);

// Negative exponents require a nonzero base.
Rat pow_rat(const Rat& base, long e);

}  // namespace rgal
