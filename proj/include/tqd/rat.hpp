#pragma once

// Exact rational scalars backed by GMP, plus a couple of small helpers used
// throughout the library.

#include <gmpxx.h>

#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

namespace tqd {

using Rat = mpq_class;
using Int = mpz_class;

inline long lcm_long(long a, long b) { return std::lcm(a, b); }

// floor-mod into [0, m)
inline long long mod_floor(long long a, long long m) {
  long long r = a % m;
  return r < 0 ? r + m : r;
}

// 2-adic valuation of a residue in [1, 2^k).  v2(0) is treated as k by
// callers; this helper requires x != 0.
inline int val2(unsigned long long x) {
  int v = 0;
  while ((x & 1ULL) == 0ULL) {
    x >>= 1;
    ++v;
  }
  return v;
}

// multiplicative inverse of an odd residue mod 2^k (Newton iteration)
inline unsigned long long inv_odd_mod2k(unsigned long long a, unsigned long long mod) {
  unsigned long long x = 1;
  for (int i = 0; i < 7; ++i) x = x * (2 - a * x);  // converges mod 2^64
  return (x % mod + mod) % mod;
}

}  // namespace tqd
