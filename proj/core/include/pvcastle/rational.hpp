#pragma once

#include <gmpxx.h>

namespace pvcastle {

using Int = mpz_class;
using Rat = mpq_class;

inline bool is_zero(const Rat& r) { return mpq_sgn(r.get_mpq_t()) == 0; }
inline bool is_zero(const Int& z) { return mpz_sgn(z.get_mpz_t()) == 0; }

// mpq_class does not canonicalize on construction; every entry that enters a
// matrix goes through here.
inline Rat canonical(Rat r) {
  r.canonicalize();
  return r;
}

inline Rat rat(long num, long den = 1) { return canonical(Rat(num, den)); }

}  // namespace pvcastle
