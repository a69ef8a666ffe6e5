#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace hopfz {

using Integer = mpz_class;
using IntVector = std::vector<Integer>;

inline std::string to_string(const Integer& x) { return x.get_str(); }

/// Floor division, rounding toward negative infinity.
inline Integer floor_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

/// Divisibility in the ring sense: 0 divides only 0.
inline bool divides(const Integer& g, const Integer& r) {
  if (g == 0) return r == 0;
  return mpz_divisible_p(r.get_mpz_t(), g.get_mpz_t()) != 0;
}

inline Integer binomial(unsigned long n, unsigned long k) {
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

} // namespace hopfz
