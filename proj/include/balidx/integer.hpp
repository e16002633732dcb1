#pragma once

#include <gmpxx.h>

#include <string>

namespace balidx {

using Integer = mpz_class;

inline std::string to_string(const Integer &value) { return value.get_str(); }

// Non-negative gcd; gcd(0, 0) = 0.
inline Integer gcd(const Integer &a, const Integer &b)
{
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

// True when a divides b, with the convention that every integer divides 0.
inline bool divides(const Integer &a, const Integer &b)
{
  if (b == 0)
    return true;
  if (a == 0)
    return false;
  return mpz_divisible_p(b.get_mpz_t(), a.get_mpz_t()) != 0;
}

} // namespace balidx
