#include "g1b/theta.hpp"

#include <algorithm>

namespace g1b {

// ---- dense matrix helpers

Matrix mat_identity(const Field& F, size_t n) {
  Matrix I(n, std::vector<FieldElem>(n, F.zero()));
  for (size_t i = 0; i < n; ++i) I[i][i] = F.one();
  return I;
}

Matrix mat_mul(const Matrix& A, const Matrix& B) {
  size_t n = A.size(), k = B.size(), m = B.empty() ? 0 : B[0].size();
  if (n == 0 || k == 0 || A[0].size() != k)
    throw PreconditionError("bad_matrix", "dimension mismatch in matrix product");
  const Field F = A[0][0].field();
  Matrix C(n, std::vector<FieldElem>(m, F.zero()));
  for (size_t i = 0; i < n; ++i)
    for (size_t l = 0; l < k; ++l) {
      if (A[i][l].is_zero()) continue;
      for (size_t j = 0; j < m; ++j) C[i][j] = C[i][j] + A[i][l] * B[l][j];
    }
  return C;
}

bool mat_eq(const Matrix& A, const Matrix& B) {
  if (A.size() != B.size()) return false;
  for (size_t i = 0; i < A.size(); ++i) {
    if (A[i].size() != B[i].size()) return false;
    for (size_t j = 0; j < A[i].size(); ++j)
      if (A[i][j] != B[i][j]) return false;
  }
  return true;
}

// ---- Heisenberg representations

HeisenbergRep heisenberg(const Field& F, u64 n, u64 c, const FieldElem& lift_scale) {
  if (n < 2) throw PreconditionError("bad_degree", "need n >= 2");
  if ((F.order() - 1) % n != 0)
    throw PreconditionError("no_unity_root", "no primitive n-th root of unity in F");
  if (gcd_u64(c % n, n) != 1)
    throw PreconditionError("bad_commutator", "commutator exponent must be coprime to n");
  if (lift_scale.is_zero())
    throw PreconditionError("bad_scale", "lift scale must be nonzero");
  HeisenbergRep rep;
  rep.n = n;
  rep.F = F;
  rep.c = c % n;
  rep.zeta = F.unity_root(n);
  rep.lift_scale = lift_scale;
  rep.Mt = Matrix(n, std::vector<FieldElem>(n, F.zero()));
  rep.Ms = Matrix(n, std::vector<FieldElem>(n, F.zero()));
  FieldElem zc = rep.zeta.pow((i64)rep.c);
  FieldElem d = F.one();
  for (u64 j = 0; j < n; ++j) {
    rep.Mt[j][(j + 1) % n] = F.one();  // down-shift: (Mt v)_i = v_{i+1}
    rep.Ms[j][j] = lift_scale * d;
    d = d * zc;
  }
  return rep;
}

HeisenbergRep heisenberg(const Field& F, u64 n) { return heisenberg(F, n, 1, F.one()); }

// ---- monomial representation (shift + diagonal), used internally for speed;
// column j carries the value diag[j] in row (j - shift) mod n.

namespace {

struct Mono {
  u64 n = 0;
  u64 shift = 0;
  std::vector<FieldElem> diag;
};

Mono mono_mul(const Mono& A, const Mono& B) {
  Mono C;
  C.n = A.n;
  C.shift = (A.shift + B.shift) % A.n;
  C.diag.resize(A.n);
  for (u64 j = 0; j < A.n; ++j)
    C.diag[j] = A.diag[(j + A.n - B.shift % A.n) % A.n] * B.diag[j];
  return C;
}

Mono mono_inv(const Mono& A) {
  Mono C;
  C.n = A.n;
  C.shift = (A.n - A.shift % A.n) % A.n;
  C.diag.resize(A.n);
  for (u64 k = 0; k < A.n; ++k) C.diag[k] = A.diag[(k + A.shift) % A.n].inv();
  return C;
}

// M_{(a,b)} = Mt^a Ms^b as a monomial matrix.
Mono mono_lift(const HeisenbergRep& rep, u64 a, u64 b) {
  Mono M;
  M.n = rep.n;
  M.shift = a % rep.n;
  M.diag.resize(rep.n);
  FieldElem zcb = rep.zeta.pow((i64)((rep.c * (b % rep.n)) % rep.n));
  FieldElem lb = rep.lift_scale.pow((i64)b);
  FieldElem acc = lb;
  for (u64 j = 0; j < rep.n; ++j) {
    M.diag[j] = acc;
    acc = acc * zcb;
  }
  return M;
}

Mono mono_frobenius(const Mono& A, u64 steps) {
  Mono C = A;
  for (auto& d : C.diag) d = d.frobenius(steps);
  return C;
}

bool mono_scalar(const Mono& A, FieldElem* out) {
  if (A.shift % A.n != 0) return false;
  for (u64 j = 1; j < A.n; ++j)
    if (A.diag[j] != A.diag[0]) return false;
  *out = A.diag[0];
  return true;
}

struct ShadowInfo {
  u64 k = 0;  // q = p^k
};

ShadowInfo validate_shadow(const HeisenbergRep& rep, const GaloisShadow& shadow) {
  if (shadow.m == 0) throw PreconditionError("bad_shadow", "shadow order must be >= 1");
  u64 p = rep.F.characteristic();
  u64 q = shadow.q, k = 0;
  if (q < 2) throw PreconditionError("bad_shadow", "Frobenius exponent must be a power of p");
  while (q % p == 0) {
    q /= p;
    ++k;
  }
  if (q != 1 || k == 0)
    throw PreconditionError("bad_shadow", "Frobenius exponent must be a positive power of p");
  if ((k * shadow.m) % rep.F.degree() != 0)
    throw PreconditionError("bad_shadow", "entrywise action does not close after m steps");
  if (powmod(shadow.q % rep.n, shadow.m, rep.n) != 1 % rep.n)
    throw PreconditionError("bad_shadow", "induced index action does not close after m steps");
  return ShadowInfo{k};
}

void validate_cocycle(const HeisenbergRep& rep, const GaloisShadow& shadow,
                      const std::vector<CocyclePair>& xi) {
  if (xi.size() != shadow.m)
    throw PreconditionError("not_a_cocycle", "cochain length differs from the group order");
  u64 n = rep.n, m = shadow.m;
  for (u64 i = 0; i < m; ++i)
    for (u64 j = 0; j < m; ++j) {
      u64 qi = powmod(shadow.q % n, i, n);
      u64 a = (xi[i].first + xi[j].first) % n;
      u64 b = (xi[i].second + mulmod(qi, xi[j].second, n)) % n;
      const CocyclePair& tgt = xi[(i + j) % m];
      if (tgt.first % n != a || tgt.second % n != b)
        throw PreconditionError("not_a_cocycle",
                                "cochain violates the cocycle law at (" + std::to_string(i) +
                                    ", " + std::to_string(j) + ")");
    }
}

}  // namespace

FieldElem cocycle_eval(const HeisenbergRep& rep, const GaloisShadow& shadow,
                       const std::vector<CocyclePair>& xi, u64 sigma, u64 tau) {
  ShadowInfo info = validate_shadow(rep, shadow);
  validate_cocycle(rep, shadow, xi);
  if (sigma >= shadow.m || tau >= shadow.m)
    throw PreconditionError("bad_shadow", "group element index out of range");
  u64 n = rep.n;
  u64 frob_steps = (info.k * sigma) % rep.F.degree();
  auto [as, bs] = xi[sigma];
  auto [at, bt] = xi[tau];
  auto [ast, bst] = xi[(sigma + tau) % shadow.m];

  Mono Msig = mono_lift(rep, as % n, bs % n);
  Mono Mtau_conj = mono_frobenius(mono_lift(rep, at % n, bt % n), frob_steps);
  Mono Mprod_inv = mono_inv(mono_lift(rep, ast % n, bst % n));
  Mono total = mono_mul(mono_mul(Msig, Mtau_conj), Mprod_inv);

  FieldElem scalar;
  if (!mono_scalar(total, &scalar))
    throw InternalError("cocycle product is not a scalar matrix");

  // closed form: D * (zeta^c)^{-a_tau b_sigma}, D = scalar of the Ms-part
  // product Ms^{b_sigma} * sigma(Ms^{b_tau}) * Ms^{-b_{sigma tau}}
  Mono ms_part = mono_mul(
      mono_mul(mono_lift(rep, 0, bs % n), mono_frobenius(mono_lift(rep, 0, bt % n), frob_steps)),
      mono_inv(mono_lift(rep, 0, bst % n)));
  FieldElem D;
  if (!mono_scalar(ms_part, &D))
    throw InternalError("Ms-part product is not a scalar matrix");
  i64 expo = -(i64)(((at % n) * (bs % n)) % n) * (i64)rep.c;
  FieldElem closed = D * rep.zeta.pow(expo);
  if (scalar != closed)
    throw InternalError("cocycle scalar disagrees with its closed form");
  return scalar;
}

std::vector<std::vector<FieldElem>> cocycle_table(const HeisenbergRep& rep,
                                                  const GaloisShadow& shadow,
                                                  const std::vector<CocyclePair>& xi) {
  std::vector<std::vector<FieldElem>> table(shadow.m);
  for (u64 s = 0; s < shadow.m; ++s) {
    table[s].reserve(shadow.m);
    for (u64 t = 0; t < shadow.m; ++t) table[s].push_back(cocycle_eval(rep, shadow, xi, s, t));
  }
  return table;
}

Matrix heisenberg_lift(const HeisenbergRep& rep, u64 a, u64 b) {
  Matrix M = mat_identity(rep.F, rep.n);
  for (u64 i = 0; i < a % rep.n; ++i) M = mat_mul(M, rep.Mt);
  for (u64 i = 0; i < b % rep.n; ++i) M = mat_mul(M, rep.Ms);
  return M;
}

// ---- coboundary solver

CoboundWitness cobound_cocycle(const HeisenbergRep& rep, const GaloisShadow& shadow,
                               const std::vector<std::vector<FieldElem>>& table) {
  ShadowInfo info = validate_shadow(rep, shadow);
  u64 m = shadow.m;
  if (table.size() != m)
    throw PreconditionError("bad_matrix", "cocycle table has the wrong dimensions");
  for (const auto& row : table) {
    if (row.size() != m)
      throw PreconditionError("bad_matrix", "cocycle table has the wrong dimensions");
    for (const auto& v : row)
      if (v.is_zero()) throw PreconditionError("bad_matrix", "cocycle values must be nonzero");
  }
  u64 p = rep.F.characteristic();
  u64 r = rep.F.degree();

  // E = F_{q^m} is where the cochain lives
  Field E;
  if (info.k * m == r) {
    E = rep.F;
  } else if (r == 1) {
    u64 qq;
    if (!checked_pow_u64(p, (unsigned)(info.k * m), (1ull << 62), &qq))
      throw BudgetExceeded("coboundary extension field exceeds the 2^62 bound");
    E = Field::make(p, (unsigned)(info.k * m));
  } else {
    throw BudgetExceeded("coboundary solver supports prime base fields or F = E");
  }
  auto embed = [&](const FieldElem& x) {
    if (E.same(rep.F)) return x;
    return E.from_int(x.coeffs()[0]);
  };

  std::vector<FieldElem> lambda(m, E.one());
  if (m > 1) {
    // norm obstruction z = prod_i c(s^i, s); solve N(mu) = z via a generator
    FieldElem z = E.one();
    for (u64 i = 0; i < m; ++i) z = z * embed(table[i][1]);
    u64 Em1 = E.order() - 1;
    u128 S = 0;
    u64 qpow = 1;
    for (u64 i = 0; i < m; ++i) {
      S += qpow % Em1;
      if (i + 1 < m) qpow *= shadow.q;
    }
    u64 Smod = (u64)(S % Em1);
    FieldElem gE = E.smallest_generator();
    FieldElem NgE = gE.pow((i64)Smod);
    FieldElem acc = E.one();
    u64 t = 0;
    while (acc != z) {
      acc = acc * NgE;
      if (++t > (1ull << 24))
        throw BudgetExceeded("norm discrete log exceeded its iteration budget");
    }
    FieldElem mu = gE.pow((i64)t);
    for (u64 i = 0; i + 1 < m; ++i)
      lambda[i + 1] =
          embed(table[i][1]).inv() * lambda[i] * mu.frobenius((info.k * i) % E.degree());
  }

  // verify the full grid: c(s^i, s^j) = lambda_i * s^i(lambda_j) / lambda_{i+j}
  std::vector<std::vector<FieldElem>> orbit(m, std::vector<FieldElem>(m, E.one()));
  for (u64 j = 0; j < m; ++j) {
    orbit[0][j] = lambda[j];
    for (u64 i = 1; i < m; ++i) orbit[i][j] = orbit[i - 1][j].frobenius(info.k % E.degree());
  }
  std::vector<FieldElem> lambda_inv(m);
  for (u64 j = 0; j < m; ++j) lambda_inv[j] = lambda[j].inv();
  for (u64 i = 0; i < m; ++i)
    for (u64 j = 0; j < m; ++j) {
      FieldElem rhs = lambda[i] * orbit[i][j] * lambda_inv[(i + j) % m];
      if (rhs != embed(table[i][j]))
        throw InternalError("constructed cochain fails to cobound the table");
    }
  return CoboundWitness{E, std::move(lambda)};
}

// ---- block-matrix model of the degree-shift embedding

namespace {

// Element of the cyclic algebra (L, b) with L = F^n, rho the coordinate
// rotation, w^n = b: coefficient grid coeff[i][j] = L-coordinate j of the
// w^i coefficient.
struct CycElem {
  std::vector<std::vector<FieldElem>> coeff;
};

struct CycAlg {
  Field F;
  u64 n;
  FieldElem b;

  CycElem zero() const {
    return CycElem{std::vector<std::vector<FieldElem>>(n, std::vector<FieldElem>(n, F.zero()))};
  }
  CycElem one() const {
    CycElem e = zero();
    for (u64 j = 0; j < n; ++j) e.coeff[0][j] = F.one();
    return e;
  }
  CycElem from_L(const std::vector<FieldElem>& v) const {
    CycElem e = zero();
    for (u64 j = 0; j < n; ++j) e.coeff[0][j] = v[j];
    return e;
  }
  CycElem w_elem() const {
    CycElem e = zero();
    if (n == 1) {
      e.coeff[0][0] = b;  // w = b when w^1 = b
    } else {
      for (u64 j = 0; j < n; ++j) e.coeff[1][j] = F.one();
    }
    return e;
  }
  // rho(a)_j = a_{j+1 mod n}
  std::vector<FieldElem> rho(const std::vector<FieldElem>& v, u64 steps) const {
    std::vector<FieldElem> out(n, F.zero());
    for (u64 j = 0; j < n; ++j) out[j] = v[(j + steps) % n];
    return out;
  }
  CycElem add(const CycElem& x, const CycElem& y) const {
    CycElem z = zero();
    for (u64 i = 0; i < n; ++i)
      for (u64 j = 0; j < n; ++j) z.coeff[i][j] = x.coeff[i][j] + y.coeff[i][j];
    return z;
  }
  // (l w^i)(l' w^i') = l * rho^i(l') * w^{i+i'}, w^n = b
  CycElem mul(const CycElem& x, const CycElem& y) const {
    CycElem z = zero();
    for (u64 i = 0; i < n; ++i) {
      bool xrow = false;
      for (u64 j = 0; j < n; ++j) xrow = xrow || !x.coeff[i][j].is_zero();
      if (!xrow) continue;
      for (u64 i2 = 0; i2 < n; ++i2) {
        std::vector<FieldElem> rot = rho(y.coeff[i2], i);
        u64 target = (i + i2) % n;
        bool carry = (i + i2) >= n;
        for (u64 j = 0; j < n; ++j) {
          FieldElem term = x.coeff[i][j] * rot[j];
          if (carry) term = term * b;
          z.coeff[target][j] = z.coeff[target][j] + term;
        }
      }
    }
    return z;
  }
  bool eq(const CycElem& x, const CycElem& y) const {
    for (u64 i = 0; i < n; ++i)
      for (u64 j = 0; j < n; ++j)
        if (x.coeff[i][j] != y.coeff[i][j]) return false;
    return true;
  }
};

using CycMatrix = std::vector<std::vector<CycElem>>;

CycMatrix cyc_identity(const CycAlg& A, u64 m) {
  CycMatrix I(m, std::vector<CycElem>(m, A.zero()));
  for (u64 i = 0; i < m; ++i) I[i][i] = A.one();
  return I;
}

CycMatrix cyc_mul(const CycAlg& A, const CycMatrix& X, const CycMatrix& Y) {
  u64 m = X.size();
  CycMatrix Z(m, std::vector<CycElem>(m, A.zero()));
  for (u64 i = 0; i < m; ++i)
    for (u64 l = 0; l < m; ++l)
      for (u64 j = 0; j < m; ++j) Z[i][j] = A.add(Z[i][j], A.mul(X[i][l], Y[l][j]));
  return Z;
}

}  // namespace

MatrixModelReport degree_shift_matrix_check(const Field& F, u64 n, u64 m,
                                            const FieldElem& b) {
  if (n == 0 || m == 0)
    throw PreconditionError("bad_degree", "block model needs n, m >= 1");
  if (b.is_zero()) throw PreconditionError("bad_scale", "b must be nonzero");
  CycAlg A{F, n, b};

  CycMatrix Z(m, std::vector<CycElem>(m, A.zero()));
  if (m == 1) {
    Z[0][0] = A.w_elem();
  } else {
    for (u64 i = 0; i + 1 < m; ++i) Z[i + 1][i] = A.one();
    Z[0][m - 1] = A.w_elem();
  }

  // relation 1: Z^{nm} = b * Id
  CycMatrix P = cyc_identity(A, m);
  for (u64 e = 0; e < n * m; ++e) P = cyc_mul(A, P, Z);
  CycElem bId = A.from_L(std::vector<FieldElem>(n, b));
  for (u64 i = 0; i < m; ++i)
    for (u64 j = 0; j < m; ++j) {
      const CycElem& want = (i == j) ? bId : A.zero();
      if (!A.eq(P[i][j], want))
        return MatrixModelReport{false, "power relation fails at cell (" + std::to_string(i) +
                                            ", " + std::to_string(j) + ")"};
    }

  // relation 2: diag(sigma(a)) Z = Z diag(a) on every basis vector of L^m
  for (u64 comp = 0; comp < m; ++comp)
    for (u64 coord = 0; coord < n; ++coord) {
      std::vector<std::vector<FieldElem>> avec(m, std::vector<FieldElem>(n, F.zero()));
      avec[comp][coord] = F.one();
      std::vector<std::vector<FieldElem>> svec(m, std::vector<FieldElem>(n, F.zero()));
      svec[0] = A.rho(avec[m - 1], 1);
      for (u64 i = 1; i < m; ++i) svec[i] = avec[i - 1];

      CycMatrix D(m, std::vector<CycElem>(m, A.zero()));
      CycMatrix Ds(m, std::vector<CycElem>(m, A.zero()));
      for (u64 i = 0; i < m; ++i) {
        D[i][i] = A.from_L(avec[i]);
        Ds[i][i] = A.from_L(svec[i]);
      }
      CycMatrix lhs = cyc_mul(A, Ds, Z);
      CycMatrix rhs = cyc_mul(A, Z, D);
      for (u64 i = 0; i < m; ++i)
        for (u64 j = 0; j < m; ++j)
          if (!A.eq(lhs[i][j], rhs[i][j]))
            return MatrixModelReport{
                false, "conjugation relation fails at cell (" + std::to_string(i) + ", " +
                           std::to_string(j) + ") for basis (" + std::to_string(comp) + ", " +
                           std::to_string(coord) + ")"};
    }
  return MatrixModelReport{true, ""};
}

}  // namespace g1b
