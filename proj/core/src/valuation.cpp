#include "g1b/valuation.hpp"

#include <algorithm>
#include <numeric>

namespace g1b {

namespace {

Vec mod_vec(Vec v, u64 m) {
  for (u64& x : v) x %= m;
  return v;
}

Vec row_combine(const Vec& u, const Vec& v, i128 x, i128 y, u64 m) {
  Vec out(u.size());
  for (size_t j = 0; j < u.size(); ++j) {
    i128 t = x * (i128)u[j] + y * (i128)v[j];
    i128 r = t % (i128)m;
    if (r < 0) r += m;
    out[j] = (u64)r;
  }
  return out;
}

Vec row_scale(const Vec& u, u64 s, u64 m) {
  Vec out(u.size());
  for (size_t j = 0; j < u.size(); ++j) out[j] = mulmod(u[j] % m, s % m, m);
  return out;
}

Vec row_sub_mult(const Vec& u, const Vec& v, u64 q, u64 m) {
  Vec out(u.size());
  for (size_t j = 0; j < u.size(); ++j)
    out[j] = submod(u[j] % m, mulmod(q % m, v[j] % m, m), m);
  return out;
}

bool row_zero(const Vec& v) {
  for (u64 x : v)
    if (x != 0) return false;
  return true;
}

size_t leftmost_nonzero(const Vec& v) {
  for (size_t j = 0; j < v.size(); ++j)
    if (v[j] != 0) return j;
  return v.size();
}

// Unit s mod m with s * p = gcd(p, m) mod m.
u64 unit_scale_to_gcd(u64 p, u64 m) {
  u64 g = gcd_u64(p, m);
  u64 p1 = p / g, m1 = m / g;
  u64 s = (m1 == 1) ? 1 : invmod(p1 % m1, m1);
  while (gcd_u64(s, m) != 1) s += m1;
  return s % m == 0 ? m : s % m;  // s in [1, m]
}

// Canonical Howell normal form of the row span of `rows` in (Z/m)^width.
std::vector<Vec> howell_form(u64 m, size_t width, std::vector<Vec> rows) {
  std::vector<Vec> work;
  for (Vec& r : rows) {
    Vec v = mod_vec(std::move(r), m);
    if (!row_zero(v)) work.push_back(std::move(v));
  }
  std::vector<Vec> pivots;  // one row per pivot column, increasing
  for (size_t c = 0; c < width; ++c) {
    // gather rows with leftmost nonzero entry at column c
    std::vector<Vec> here;
    std::vector<Vec> rest;
    for (Vec& v : work)
      (leftmost_nonzero(v) == c ? here : rest).push_back(std::move(v));
    work = std::move(rest);
    while (here.size() > 1) {
      Vec u = std::move(here.back());
      here.pop_back();
      Vec& v = here.back();
      XGcd e = xgcd_i128((i128)v[c], (i128)u[c]);
      Vec combined = row_combine(v, u, e.x, e.y, m);  // pivot gcd at c
      u64 g = (u64)e.g;
      Vec killed_v = row_sub_mult(v, combined, v[c] / g, m);
      Vec killed_u = row_sub_mult(u, combined, u[c] / g, m);
      v = std::move(combined);
      for (Vec* k : {&killed_v, &killed_u})
        if (!row_zero(*k)) work.push_back(std::move(*k));
    }
    if (!here.empty()) {
      Vec pivot_row = std::move(here.front());
      // scalar annihilator keeps the span property of the Howell form
      u64 t = m / gcd_u64(pivot_row[c], m);
      Vec ann = row_scale(pivot_row, t % m, m);
      if (!row_zero(ann)) work.push_back(std::move(ann));
      pivots.push_back(std::move(pivot_row));
    }
  }
  // normalize pivots to divisors of m and reduce entries above pivots
  for (Vec& r : pivots) {
    size_t c = leftmost_nonzero(r);
    r = row_scale(r, unit_scale_to_gcd(r[c], m), m);
  }
  // left-to-right: reducing with pivot i only touches columns >= c(i), so
  // columns already reduced stay reduced and each pivot column is finalized
  // by its own pass
  for (size_t i = 0; i < pivots.size(); ++i) {
    size_t c = leftmost_nonzero(pivots[i]);
    u64 g = pivots[i][c];
    for (size_t j = 0; j < i; ++j)
      if (pivots[j][c] != 0) pivots[j] = row_sub_mult(pivots[j], pivots[i], pivots[j][c] / g, m);
  }
  return pivots;
}

// Generators of {x : sum_i x_i * rows_i = 0} over Z/m, via the Howell form of
// the augmented system [rows | I].
std::vector<Vec> howell_kernel(u64 m, const std::vector<Vec>& rows, size_t width) {
  size_t k = rows.size();
  std::vector<Vec> aug;
  for (size_t i = 0; i < k; ++i) {
    Vec v(width + k, 0);
    for (size_t j = 0; j < width; ++j) v[j] = rows[i][j] % m;
    v[width + i] = 1;
    aug.push_back(std::move(v));
  }
  std::vector<Vec> h = howell_form(m, width + k, aug);
  std::vector<Vec> out;
  for (const Vec& r : h) {
    bool left_zero = true;
    for (size_t j = 0; j < width; ++j) left_zero = left_zero && r[j] == 0;
    if (!left_zero) continue;
    out.push_back(Vec(r.begin() + (long)width, r.end()));
  }
  return out;
}

}  // namespace

// ---- Subgroup

Subgroup Subgroup::make(u64 modulus, u64 rank, const std::vector<Vec>& generators) {
  if (modulus < 2) throw PreconditionError("bad_modulus", "modulus must be >= 2");
  if (rank == 0) throw PreconditionError("bad_degree", "rank must be >= 1");
  for (const Vec& g : generators)
    if (g.size() != rank)
      throw PreconditionError("bad_matrix", "generator length differs from the rank");
  Subgroup s;
  s.m_ = modulus;
  s.rank_ = rank;
  s.basis_ = howell_form(modulus, rank, generators);
  return s;
}

Subgroup Subgroup::zero(u64 modulus, u64 rank) { return make(modulus, rank, {}); }

Subgroup Subgroup::full(u64 modulus, u64 rank) {
  std::vector<Vec> id;
  for (u64 i = 0; i < rank; ++i) {
    Vec e(rank, 0);
    e[i] = 1;
    id.push_back(std::move(e));
  }
  return make(modulus, rank, id);
}

u64 Subgroup::order() const {
  u64 o = 1;
  for (const Vec& r : basis_) o *= m_ / r[leftmost_nonzero(r)];
  return o;
}

bool Subgroup::contains(const Vec& v) const {
  if (v.size() != rank_) throw PreconditionError("bad_matrix", "vector length mismatch");
  Vec w = mod_vec(v, m_);
  for (const Vec& r : basis_) {
    size_t c = leftmost_nonzero(r);
    if (w[c] % r[c] != 0) return false;
    w = row_sub_mult(w, r, w[c] / r[c], m_);
  }
  return row_zero(w);
}

bool Subgroup::subset_of(const Subgroup& o) const {
  if (m_ != o.m_ || rank_ != o.rank_)
    throw PreconditionError("bad_matrix", "subgroups live in different modules");
  for (const Vec& r : basis_)
    if (!o.contains(r)) return false;
  return true;
}

bool Subgroup::operator==(const Subgroup& o) const {
  return m_ == o.m_ && rank_ == o.rank_ && basis_ == o.basis_;
}

std::vector<Vec> Subgroup::elements() const {
  std::vector<Vec> out{Vec(rank_, 0)};
  for (const Vec& r : basis_) {
    u64 reps = m_ / r[leftmost_nonzero(r)];
    std::vector<Vec> next;
    next.reserve(out.size() * reps);
    for (const Vec& base : out) {
      Vec cur = base;
      for (u64 k = 0; k < reps; ++k) {
        next.push_back(cur);
        for (size_t j = 0; j < rank_; ++j) cur[j] = addmod(cur[j], r[j], m_);
      }
    }
    out = std::move(next);
  }
  return out;
}

// ---- symplectic module

SymplecticModule SymplecticModule::make(u64 n) {
  if (n < 2) throw PreconditionError("bad_degree", "n must be >= 2");
  SymplecticModule M;
  M.n = n;
  M.gram.assign(4, Vec(4, 0));
  M.gram[0][1] = 1 % n;
  M.gram[1][0] = n - 1;
  M.gram[2][3] = 1 % n;
  M.gram[3][2] = n - 1;
  return M;
}

u64 SymplecticModule::pair(const Vec& u, const Vec& w) const {
  if (u.size() != rank || w.size() != rank)
    throw PreconditionError("bad_matrix", "vector length mismatch");
  u64 acc = 0;
  for (size_t i = 0; i < rank; ++i)
    for (size_t j = 0; j < rank; ++j)
      acc = addmod(acc, mulmod(mulmod(u[i] % n, gram[i][j], n), w[j] % n, n), n);
  return acc;
}

bool SymplecticModule::alternating() const {
  for (size_t i = 0; i < rank; ++i) {
    if (gram[i][i] != 0) return false;
    for (size_t j = 0; j < rank; ++j)
      if (addmod(gram[i][j], gram[j][i], n) != 0) return false;
  }
  return true;
}

bool SymplecticModule::nondegenerate() const {
  // 4x4 determinant mod n by cofactor expansion
  auto det3 = [&](size_t r0, size_t r1, size_t r2, size_t c0, size_t c1, size_t c2) {
    u64 a = gram[r0][c0], b = gram[r0][c1], c = gram[r0][c2];
    u64 d = gram[r1][c0], e = gram[r1][c1], f = gram[r1][c2];
    u64 g = gram[r2][c0], h = gram[r2][c1], i = gram[r2][c2];
    u64 pos = addmod(addmod(mulmod(a, mulmod(e, i, n), n), mulmod(b, mulmod(f, g, n), n), n),
                     mulmod(c, mulmod(d, h, n), n), n);
    u64 neg = addmod(addmod(mulmod(c, mulmod(e, g, n), n), mulmod(b, mulmod(d, i, n), n), n),
                     mulmod(a, mulmod(f, h, n), n), n);
    return submod(pos, neg, n);
  };
  u64 det = 0;
  size_t cols[4] = {0, 1, 2, 3};
  for (size_t k = 0; k < 4; ++k) {
    size_t rest[3];
    size_t idx = 0;
    for (size_t c : cols)
      if (c != k) rest[idx++] = c;
    u64 minor = det3(1, 2, 3, rest[0], rest[1], rest[2]);
    u64 term = mulmod(gram[0][k], minor, n);
    det = (k % 2 == 0) ? addmod(det, term, n) : submod(det, term, n);
  }
  return gcd_u64(det, n) == 1;
}

// ---- orthogonal complement and splitting criterion

Subgroup orth_complement(const SymplecticModule& M, const Subgroup& H) {
  if (H.modulus() != M.n || H.rank() != M.rank)
    throw PreconditionError("bad_matrix", "subgroup does not live in the symplectic module");
  // condition matrix: row i = (pair(e_i, h))_h over the basis of H
  std::vector<Vec> rows(M.rank);
  for (size_t i = 0; i < M.rank; ++i) {
    Vec ei(M.rank, 0);
    ei[i] = 1;
    Vec row;
    row.reserve(H.basis().size());
    for (const Vec& h : H.basis()) row.push_back(M.pair(ei, h));
    rows[i] = std::move(row);
  }
  std::vector<Vec> kern = howell_kernel(M.n, rows, H.basis().size());
  return Subgroup::make(M.n, M.rank, kern);
}

namespace {

// (C intersect n-torsion of (Z/n^2)^4) divided by n, as a subgroup of (Z/n)^4.
Subgroup torsion_intersection(const SymplecticModule& M, const Subgroup& C) {
  u64 n = M.n, n2 = n * n;
  const auto& B = C.basis();
  // coefficients a with sum a_t * (n * r_t) = 0 mod n^2
  std::vector<Vec> scaled;
  for (const Vec& r : B) {
    Vec s(r.size());
    for (size_t j = 0; j < r.size(); ++j) s[j] = mulmod(n, r[j], n2);
    scaled.push_back(std::move(s));
  }
  std::vector<Vec> coeffs = howell_kernel(n2, scaled, M.rank);
  std::vector<Vec> gens;
  for (const Vec& a : coeffs) {
    Vec x(M.rank, 0);
    for (size_t t = 0; t < B.size(); ++t)
      for (size_t j = 0; j < M.rank; ++j)
        x[j] = addmod(x[j], mulmod(a[t] % n2, B[t][j], n2), n2);
    Vec y(M.rank);
    for (size_t j = 0; j < M.rank; ++j) {
      if (x[j] % n != 0)
        throw InternalError("torsion element has a coordinate not divisible by n");
      y[j] = (x[j] / n) % n;
    }
    gens.push_back(std::move(y));
  }
  return Subgroup::make(n, M.rank, gens);
}

}  // namespace

bool splitting_check(const SymplecticModule& M, const Subgroup& C) {
  if (C.modulus() != M.n * M.n || C.rank() != M.rank)
    throw PreconditionError("bad_matrix",
                            "candidate must live in the ambient (Z/n^2)^4 module");
  Subgroup D = torsion_intersection(M, C);
  return orth_complement(M, D).subset_of(D);
}

// ---- the certificate

NoncyclicReport noncyclic_certificate(u64 n, bool exhaustive) {
  if (n < 2) throw PreconditionError("bad_degree", "n must be >= 2");
  NoncyclicReport rep;
  rep.n = n;

  // counting branch: any cyclic candidate C has |C cap V| = d dividing n, so
  // the complement has order n^4/d >= n^3 and exponent n; a group of exponent
  // n and order > n cannot be cyclic, so it cannot sit inside the cyclic
  // intersection.
  bool counting = true;
  for (u64 d = 1; d <= n; ++d) {
    if (n % d != 0) continue;
    u64 comp_order = n * n * n * n / d;
    counting = counting && comp_order >= n * n * n && comp_order > n;
  }
  rep.counting_branch_noncyclic = counting;

  if (exhaustive) {
    if (n > 5)
      throw BudgetExceeded("exhaustive cyclic enumeration bounded by n <= 5");
    SymplecticModule M = SymplecticModule::make(n);
    u64 n2 = n * n;
    rep.exhaustive_ran = true;
    rep.min_complement_order = ~0ull;
    u64 total = n2 * n2 * n2 * n2;
    for (u64 code = 0; code < total; ++code) {
      Vec v(4);
      u64 t = code;
      for (size_t j = 0; j < 4; ++j) {
        v[j] = t % n2;
        t /= n2;
      }
      // additive order of v
      u64 ord = 1;
      for (u64 x : v) {
        u64 ox = n2 / gcd_u64(x, n2);
        ord = ord / gcd_u64(ord, ox) * ox;
      }
      // keep only the lexicographically smallest generator of <v>
      bool canonical = true;
      for (u64 k = 2; k < ord && canonical; ++k) {
        if (gcd_u64(k, ord) != 1) continue;
        Vec w(4);
        for (size_t j = 0; j < 4; ++j) w[j] = mulmod(k, v[j], n2);
        if (w < v) canonical = false;
      }
      if (!canonical) continue;
      ++rep.cyclic_subgroups_scanned;
      Subgroup C = Subgroup::make(n2, 4, {v});
      Subgroup D = torsion_intersection(M, C);
      Subgroup Dperp = orth_complement(M, D);
      rep.max_intersection_order = std::max(rep.max_intersection_order, D.order());
      rep.min_complement_order = std::min(rep.min_complement_order, Dperp.order());
      if (Dperp.subset_of(D)) ++rep.splitting_found;
    }
    rep.branches_agree = (rep.splitting_found == 0) == rep.counting_branch_noncyclic;
  } else {
    rep.branches_agree = rep.counting_branch_noncyclic;
  }
  return rep;
}

}  // namespace g1b
