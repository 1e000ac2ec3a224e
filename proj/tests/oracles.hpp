#pragma once
// Independent reference implementations ("oracles") used to cross-check the
// library.  Each one recomputes a quantity along a different route than the
// library: schoolbook polynomial arithmetic for field products, character
// sums for curve orders, straight-line divisor chains over a quadratic
// extension for Weil pairings, brute-force coset minima for Kummer
// canonicalization, raw integer arithmetic for tame symbols, Gaussian
// elimination for matrix scalars, and breadth-first closure for subgroups.
// Deliberately simple and slow.

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "g1b/arith.hpp"
#include "g1b/ec.hpp"
#include "g1b/ff.hpp"
#include "g1b/kummer.hpp"

namespace testo {

using g1b::i64;
using g1b::u64;

// ---- schoolbook product in F_{p^r} ---------------------------------------

// Multiplies coefficient vectors as integer polynomials, reduces mod p, then
// long-divides by the field's monic modulus.
inline std::vector<u64> schoolbook_mul(const g1b::Field& F, const std::vector<u64>& a,
                                       const std::vector<u64>& b) {
  const u64 p = F.characteristic();
  const unsigned r = F.degree();
  std::vector<u64> prod(2 * r, 0);
  for (unsigned i = 0; i < r; ++i)
    for (unsigned j = 0; j < r; ++j)
      prod[i + j] = (prod[i + j] + g1b::mulmod(a[i] % p, b[j] % p, p)) % p;
  const std::vector<u64>& mod = F.modulus();  // non-leading coeffs, monic
  for (unsigned i = 2 * r; i-- > r;) {
    u64 lead = prod[i];
    if (lead == 0) continue;
    prod[i] = 0;
    for (unsigned j = 0; j < r; ++j) {
      unsigned k = i - r + j;
      prod[k] = g1b::submod(prod[k], g1b::mulmod(lead, mod[j] % p, p), p);
    }
  }
  prod.resize(r);
  return prod;
}

// ---- curve order by quadratic character sums (prime fields) --------------

inline u64 legendre_order(u64 p, u64 a4, u64 a6) {
  i64 sum = 0;
  for (u64 x = 0; x < p; ++x) {
    u64 rhs = (g1b::mulmod(g1b::mulmod(x, x, p), x, p) + g1b::mulmod(a4, x, p) + a6) % p;
    if (rhs == 0) continue;
    sum += g1b::powmod(rhs, (p - 1) / 2, p) == 1 ? 1 : -1;
  }
  return (u64)((i64)p + 1 + sum);
}

// ---- Weil pairing via straight-line divisor chains -----------------------

// Value at affine X of the line through A and B on E (chord, tangent, or
// vertical), with the usual conventions for the point at infinity.
inline g1b::FieldElem line_at(const g1b::Curve& E, const g1b::Point& A, const g1b::Point& B,
                              const g1b::Point& X) {
  const g1b::Field& F = E.field();
  if (A.infinity && B.infinity) return F.one();
  if (A.infinity) return X.x - B.x;
  if (B.infinity) return X.x - A.x;
  bool same_x = (A.x == B.x);
  if (same_x && A.y != B.y) return X.x - A.x;           // vertical chord
  if (same_x && A.y.is_zero()) return X.x - A.x;        // vertical tangent
  g1b::FieldElem lambda =
      same_x ? (F.from_int(3) * A.x * A.x + E.a4()) * (F.from_int(2) * A.y).inv()
             : (B.y - A.y) * (B.x - A.x).inv();
  return X.y - A.y - lambda * (X.x - A.x);
}

// f_{n,P}(X) built by the additive chain f_{j+1} = f_j * l_{jP,P} / v_{(j+1)P}.
// Returns nullopt whenever a factor evaluates to zero (degenerate choice of X).
inline std::optional<g1b::FieldElem> chain_eval(const g1b::Curve& E, const g1b::Point& P, u64 n,
                                                const g1b::Point& X) {
  const g1b::Field& F = E.field();
  if (X.infinity) return std::nullopt;
  g1b::FieldElem acc = F.one();
  g1b::Point R = P;
  for (u64 j = 1; j < n; ++j) {
    g1b::FieldElem l = line_at(E, R, P, X);
    if (l.is_zero()) return std::nullopt;
    R = E.add(R, P);
    g1b::FieldElem v = R.infinity ? F.one() : X.x - R.x;
    if (v.is_zero()) return std::nullopt;
    acc = acc * l * v.inv();
  }
  return acc;
}

// All affine points of E in decreasing canonical order (the oracle scans its
// shifts in the opposite order from the library on purpose).
inline std::vector<g1b::Point> points_desc(const g1b::Curve& E) {
  const g1b::Field& F = E.field();
  std::vector<g1b::Point> pts;
  for (u64 xk = 0; xk < F.order(); ++xk) {
    g1b::FieldElem x = F.from_key(xk);
    g1b::FieldElem rhs = E.rhs(x);
    if (rhs.is_zero()) {
      pts.push_back(g1b::Point::affine(x, F.zero()));
    } else if (rhs.is_square()) {
      g1b::FieldElem y = rhs.sqrt();
      pts.push_back(g1b::Point::affine(x, y));
      pts.push_back(g1b::Point::affine(x, -y));
    }
  }
  std::reverse(pts.begin(), pts.end());
  return pts;
}

// Weil pairing of n-torsion points P, Q on a prime-field curve, computed over
// the quadratic extension with the ratio formula
//   e_n(P,Q) = [f_P(Q+R)/f_P(R)] / [f_Q(P-R)/f_Q(-R)],
// scanning shifts R until all four evaluations are defined and nonzero.  The
// value is asserted to land in the base field and returned there.
inline g1b::FieldElem weil_oracle(const g1b::Curve& E, const g1b::Point& P, const g1b::Point& Q,
                                  u64 n) {
  const g1b::Field& F = E.field();
  if (F.degree() != 1) throw std::runtime_error("weil_oracle: prime-field curves only");
  if (P.infinity || Q.infinity) return F.one();
  g1b::Field F2 = g1b::Field::make(F.characteristic(), 2);
  auto lift = [&](const g1b::FieldElem& e) { return F2.from_coeffs({e.coeffs()[0]}); };
  auto liftp = [&](const g1b::Point& pt) {
    return pt.infinity ? g1b::Point::at_infinity() : g1b::Point::affine(lift(pt.x), lift(pt.y));
  };
  g1b::Curve E2 = g1b::Curve::make(F2, lift(E.a4()), lift(E.a6()));
  g1b::Point P2 = liftp(P), Q2 = liftp(Q);
  g1b::Point mQ2 = E2.negate(Q2);
  g1b::Point PmQ2 = E2.add(P2, mQ2);
  for (const g1b::Point& R : points_desc(E2)) {
    if (g1b::point_eq(R, P2) || g1b::point_eq(R, mQ2) || g1b::point_eq(R, PmQ2)) continue;
    auto a1 = chain_eval(E2, P2, n, E2.add(Q2, R));
    auto a2 = chain_eval(E2, P2, n, R);
    auto b1 = chain_eval(E2, Q2, n, E2.add(P2, E2.negate(R)));
    auto b2 = chain_eval(E2, Q2, n, E2.negate(R));
    if (!a1 || !a2 || !b1 || !b2) continue;
    g1b::FieldElem e = (*a1 * a2->inv()) * (*b1 * b2->inv()).inv();
    std::vector<u64> c = e.coeffs();
    if (c[1] != 0) throw std::runtime_error("weil_oracle: value escaped the base field");
    return F.from_int(c[0]);
  }
  throw std::runtime_error("weil_oracle: no usable shift");
}

// ---- Kummer coset minimum by brute force ---------------------------------

inline g1b::FieldElem coset_min_brute(const g1b::Field& F, u64 n, const g1b::FieldElem& u) {
  g1b::FieldElem best = u;
  for (u64 k = 1; k < F.order(); ++k) {
    g1b::FieldElem x = F.from_key(k);
    g1b::FieldElem cand = u * x.pow((i64)n);
    if (cand < best) best = cand;
  }
  return best;
}

// ---- tame symbol by raw integer arithmetic (f = 1) ------------------------

// ((-1)^{va vb} * ub^{va} * ua^{-vb})^{(p-1)/n} as an integer mod p.
inline u64 symbol_int(u64 p, u64 n, u64 va, u64 ua, u64 vb, u64 ub) {
  u64 t = g1b::mulmod(g1b::powmod(ub % p, va, p), g1b::powmod(g1b::invmod(ua % p, p), vb, p), p);
  if ((va & 1) && (vb & 1)) t = (p - t) % p;
  return g1b::powmod(t, (p - 1) / n, p);
}

// ---- dense matrix inverse by Gaussian elimination -------------------------

inline std::vector<std::vector<g1b::FieldElem>> gauss_inverse(
    const g1b::Field& F, std::vector<std::vector<g1b::FieldElem>> M) {
  size_t n = M.size();
  std::vector<std::vector<g1b::FieldElem>> I(n, std::vector<g1b::FieldElem>(n, F.zero()));
  for (size_t i = 0; i < n; ++i) I[i][i] = F.one();
  for (size_t col = 0; col < n; ++col) {
    size_t piv = col;
    while (piv < n && M[piv][col].is_zero()) ++piv;
    if (piv == n) throw std::runtime_error("gauss_inverse: singular matrix");
    std::swap(M[piv], M[col]);
    std::swap(I[piv], I[col]);
    g1b::FieldElem inv = M[col][col].inv();
    for (size_t j = 0; j < n; ++j) {
      M[col][j] = M[col][j] * inv;
      I[col][j] = I[col][j] * inv;
    }
    for (size_t row = 0; row < n; ++row) {
      if (row == col || M[row][col].is_zero()) continue;
      g1b::FieldElem f = M[row][col];
      for (size_t j = 0; j < n; ++j) {
        M[row][j] = M[row][j] - f * M[col][j];
        I[row][j] = I[row][j] - f * I[col][j];
      }
    }
  }
  return I;
}

// ---- additive closure of generators in (Z/m)^rank -------------------------

inline std::set<std::vector<u64>> additive_closure(u64 m, u64 rank,
                                                   const std::vector<std::vector<u64>>& gens) {
  std::set<std::vector<u64>> seen;
  std::vector<std::vector<u64>> queue{std::vector<u64>(rank, 0)};
  seen.insert(queue[0]);
  while (!queue.empty()) {
    std::vector<u64> cur = queue.back();
    queue.pop_back();
    for (const std::vector<u64>& g : gens) {
      std::vector<u64> nxt(rank);
      for (u64 i = 0; i < rank; ++i) nxt[i] = (cur[i] + g[i] % m) % m;
      if (seen.insert(nxt).second) queue.push_back(nxt);
    }
  }
  return seen;
}

// ---- cyclic subgroup count of (Z/m)^4 by order tally ----------------------

inline u64 cyclic_subgroup_count(u64 m) {
  std::map<u64, u64> count_by_order;
  u64 total = m * m * m * m;
  for (u64 code = 0; code < total; ++code) {
    u64 t = code, ord = 1;
    for (int j = 0; j < 4; ++j) {
      u64 x = t % m;
      t /= m;
      u64 ox = m / g1b::gcd_u64(x, m);
      ord = ord / g1b::gcd_u64(ord, ox) * ox;
    }
    ++count_by_order[ord];
  }
  auto phi = [](u64 d) {
    u64 r = d;
    for (u64 q = 2; q * q <= d; ++q) {
      if (d % q) continue;
      r -= r / q;
      while (d % q == 0) d /= q;
    }
    if (d > 1) r -= r / d;
    return r;
  };
  u64 subgroups = 0;
  for (auto [ord, cnt] : count_by_order) subgroups += cnt / phi(ord);
  return subgroups;
}

}  // namespace testo
