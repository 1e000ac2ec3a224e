#include "g1b/arith.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace g1b {

u64 powmod(u64 base, u64 exp, u64 m) {
  if (m == 1) return 0;
  u64 r = 1;
  base %= m;
  while (exp) {
    if (exp & 1) r = mulmod(r, base, m);
    base = mulmod(base, base, m);
    exp >>= 1;
  }
  return r;
}

u64 gcd_u64(u64 a, u64 b) {
  while (b) {
    a %= b;
    std::swap(a, b);
  }
  return a;
}

XGcd xgcd_i128(i128 a, i128 b) {
  i128 old_r = a, r = b;
  i128 old_s = 1, s = 0;
  i128 old_t = 0, t = 1;
  while (r != 0) {
    i128 q = old_r / r;
    old_r -= q * r;
    std::swap(old_r, r);
    old_s -= q * s;
    std::swap(old_s, s);
    old_t -= q * t;
    std::swap(old_t, t);
  }
  if (old_r < 0) {
    old_r = -old_r;
    old_s = -old_s;
    old_t = -old_t;
  }
  return {old_r, old_s, old_t};
}

u64 invmod(u64 a, u64 m) {
  XGcd e = xgcd_i128((i128)(a % m), (i128)m);
  i128 x = e.x % (i128)m;
  if (x < 0) x += m;
  return (u64)x;
}

static bool miller_rabin_witness(u64 n, u64 a, u64 d, int r) {
  a %= n;
  if (a == 0) return true;
  u64 x = powmod(a, d, n);
  if (x == 1 || x == n - 1) return true;
  for (int i = 1; i < r; ++i) {
    x = mulmod(x, x, n);
    if (x == n - 1) return true;
  }
  return false;
}

bool is_prime_u64(u64 n) {
  if (n < 2) return false;
  for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % p == 0) return n == p;
  }
  u64 d = n - 1;
  int r = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++r;
  }
  // This base set is a proven deterministic witness set for all n < 2^64.
  for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (!miller_rabin_witness(n, a, d, r)) return false;
  }
  return true;
}

static u64 pollard_rho(u64 n) {
  if ((n & 1) == 0) return 2;
  for (u64 c = 1;; ++c) {
    auto f = [&](u64 x) { return addmod(mulmod(x, x, n), c, n); };
    u64 x = 2, y = 2, d = 1;
    u64 q = 1;
    int steps = 0;
    while (d == 1) {
      x = f(x);
      y = f(f(y));
      u64 diff = x > y ? x - y : y - x;
      if (diff == 0) break;
      q = mulmod(q, diff, n);
      if (++steps % 64 == 0) {
        d = gcd_u64(q, n);
        if (d != 1 && d != n) return d;
        q = 1;
      }
    }
    d = gcd_u64(q, n);
    if (d != 1 && d != n) return d;
    // cycle without factor: retry with next c
  }
}

static void factor_rec(u64 n, std::vector<u64>& primes) {
  if (n == 1) return;
  if (is_prime_u64(n)) {
    primes.push_back(n);
    return;
  }
  u64 d = pollard_rho(n);
  factor_rec(d, primes);
  factor_rec(n / d, primes);
}

std::vector<std::pair<u64, int>> factorize_u64(u64 n) {
  std::vector<u64> primes;
  // strip small primes first for speed and rho stability
  for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull}) {
    while (n % p == 0) {
      primes.push_back(p);
      n /= p;
    }
  }
  factor_rec(n, primes);
  std::sort(primes.begin(), primes.end());
  std::vector<std::pair<u64, int>> out;
  for (u64 p : primes) {
    if (!out.empty() && out.back().first == p)
      ++out.back().second;
    else
      out.push_back({p, 1});
  }
  return out;
}

u64 mult_order_mod(u64 a, u64 m, u64 group_order) {
  u64 ord = group_order;
  for (auto [p, e] : factorize_u64(group_order)) {
    for (int i = 0; i < e; ++i) {
      if (powmod(a, ord / p, m) == 1)
        ord /= p;
      else
        break;
    }
  }
  return ord;
}

u64 next_prime_at_least(u64 n) {
  if (n <= 2) return 2;
  if ((n & 1) == 0) ++n;
  while (!is_prime_u64(n)) n += 2;
  return n;
}

u64 isqrt_u64(u64 n) {
  if (n == 0) return 0;
  u64 r = static_cast<u64>(std::sqrt(static_cast<double>(n)));
  while (r > 0 && r > n / r) --r;
  while ((r + 1) <= n / (r + 1)) ++r;
  return r;
}

bool checked_pow_u64(u64 p, unsigned r, u64 limit, u64* out) {
  u64 acc = 1;
  for (unsigned i = 0; i < r; ++i) {
    if (acc > limit / p) return false;
    acc *= p;
  }
  if (acc >= limit) return false;
  *out = acc;
  return true;
}

}  // namespace g1b
