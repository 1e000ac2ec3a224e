#pragma once
// 64-bit exact modular arithmetic and integer number theory used across the
// library: double-width mul/pow mod, extended gcd, deterministic Miller-Rabin
// primality, Pollard rho factorization.  Everything is deterministic.

#include <cstdint>
#include <utility>
#include <vector>

namespace g1b {

using u64 = std::uint64_t;
using i64 = std::int64_t;
using u128 = unsigned __int128;
using i128 = __int128;

inline u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>((u128)a * b % m); }

u64 powmod(u64 base, u64 exp, u64 m);

inline u64 addmod(u64 a, u64 b, u64 m) {
  u64 s = a + b;  // a,b < m <= 2^62 so no overflow in our use; keep safe anyway
  if (s >= m || s < a) s -= m;
  return s;
}
inline u64 submod(u64 a, u64 b, u64 m) { return a >= b ? a - b : a + (m - b); }

u64 gcd_u64(u64 a, u64 b);
// Extended gcd on signed 128-bit lifts: returns (g, x, y) with a*x + b*y = g.
struct XGcd {
  i128 g, x, y;
};
XGcd xgcd_i128(i128 a, i128 b);

// Inverse of a modulo m; requires gcd(a, m) = 1.
u64 invmod(u64 a, u64 m);

// Deterministic Miller-Rabin, valid for all 64-bit inputs.
bool is_prime_u64(u64 n);

// Pollard-rho based factorization; returns (prime, multiplicity) pairs sorted
// by prime.  Deterministic (fixed parameter schedule).
std::vector<std::pair<u64, int>> factorize_u64(u64 n);

// Multiplicative order of a modulo m (gcd(a,m)=1), given the factorization of
// the group order ord_bound (some multiple of the true order, e.g. m-1 for a
// prime field or q-1 generally).
u64 mult_order_mod(u64 a, u64 m, u64 group_order);

// Smallest prime >= n (64-bit).
u64 next_prime_at_least(u64 n);

// floor(sqrt(n)) on 64-bit integers.
u64 isqrt_u64(u64 n);

// Checked p^r with failure when the result would reach 2^62.
bool checked_pow_u64(u64 p, unsigned r, u64 limit, u64* out);

}  // namespace g1b
