#pragma once
// Heisenberg matrix lifts of the n-torsion translation operators, exact
// evaluation of the induced Galois 2-cocycle against its closed form, a
// constructive coboundary solver over finite fields, and the block-matrix
// model backing the degree-shift identity of brauer.hpp.
//
// Orientation: Mt is the cyclic down-shift ((Mt v)_i = v_{i+1 mod n}) and
// Ms = lift_scale * diag((zeta^c)^j), so Mt * Ms = zeta^c * Ms * Mt, i.e. the
// commutator [Mt, Ms] is the scalar zeta^c.  Lifts are M_{(a,b)} = Mt^a Ms^b.
// With lift_scale = 1, Ms^n = Id and the cocycle correction d is identically
// 1; a non-identity lift_scale exercises the general closed form.

#include <string>
#include <utility>
#include <vector>

#include "g1b/ff.hpp"

namespace g1b {

using Matrix = std::vector<std::vector<FieldElem>>;

Matrix mat_identity(const Field& F, size_t n);
Matrix mat_mul(const Matrix& A, const Matrix& B);
bool mat_eq(const Matrix& A, const Matrix& B);

struct HeisenbergRep {
  u64 n = 0;
  Field F;
  u64 c = 1;            // commutator exponent: Mt Ms Mt^{-1} Ms^{-1} = zeta^c Id
  FieldElem zeta;       // canonical primitive n-th root of unity in F
  FieldElem lift_scale; // scalar multiplying Ms
  Matrix Mt, Ms;
};

// Canonical representation with c = 1 and lift_scale = 1.  Requires n >= 2
// and a primitive n-th root of unity in F (n | |F| - 1).
HeisenbergRep heisenberg(const Field& F, u64 n);
// General form: Ms = lift_scale * diag((zeta^c)^j); requires gcd(c, n) = 1
// and lift_scale != 0.
HeisenbergRep heisenberg(const Field& F, u64 n, u64 c, const FieldElem& lift_scale);

// Dense lift M_{(a,b)} = Mt^a * Ms^b.
Matrix heisenberg_lift(const HeisenbergRep& rep, u64 a, u64 b);

// Cyclic group G = <sigma> of order m acting entrywise on matrices by
// sigma^i : x -> x^{q^i}, with q a power of char(F) and the action trivial
// after m steps (degree(F) | i * log_p q * m).  The induced action on index
// pairs is (a, b) -> (a, q^i b mod n); q = |F| gives the trivial action.
struct GaloisShadow {
  u64 m = 1;
  u64 q = 0;
};

using CocyclePair = std::pair<u64, u64>;  // (a, b) exponents mod n

// Scalar of M_{xi(sigma)} * sigma(M_{xi(tau)}) * M_{xi(sigma*tau)}^{-1} for
// sigma = shadow index s, tau = index t.  xi must be a 1-cocycle of length m
// for the shadow-induced action on (Z/n)^2.  The product is checked to be a
// scalar matrix and to equal the closed form
//     D * (zeta^c)^{-a_tau * b_sigma},
// where D is the scalar of the Ms-part product Ms^{b_sigma} * sigma(Ms^{b_tau})
// * Ms^{-b_{sigma tau}}; a mismatch raises InternalError.
FieldElem cocycle_eval(const HeisenbergRep& rep, const GaloisShadow& shadow,
                       const std::vector<CocyclePair>& xi, u64 sigma, u64 tau);

// The full m x m grid of cocycle_eval values.
std::vector<std::vector<FieldElem>> cocycle_table(const HeisenbergRep& rep,
                                                  const GaloisShadow& shadow,
                                                  const std::vector<CocyclePair>& xi);

// A 1-cochain lambda with table(s,t) = lambda_s * s(lambda_t) / lambda_{st},
// constructed over the extension E = F_{q^m} (the natural home of the
// cochain; the table embeds into E).  The full grid identity is re-verified
// before returning.  Supports prime base fields F = F_p, or F = E itself.
struct CoboundWitness {
  Field E;
  std::vector<FieldElem> lambda;  // indexed by shadow element
};
CoboundWitness cobound_cocycle(const HeisenbergRep& rep, const GaloisShadow& shadow,
                               const std::vector<std::vector<FieldElem>>& table);

// Verifies the m x m block-matrix model of the degree-shift embedding: with
// L = F^n carrying the rotation action and the degree-n cyclic algebra (L, b)
// generated by w (w^n = b, w * l = rho(l) * w), the companion-style block
// matrix Z (subdiagonal identities, w in the corner) must satisfy
//   Z^{nm} = b * Id   and   diag(sigma(a)) * Z = Z * diag(a)
// for every basis vector a of L^m, sigma(a) = (rho(a_m), a_1, ..., a_{m-1}).
// Returns ok = false with the failing cell on any mismatch.
struct MatrixModelReport {
  bool ok = true;
  std::string detail;
};
MatrixModelReport degree_shift_matrix_check(const Field& F, u64 n, u64 m,
                                            const FieldElem& b);

}  // namespace g1b
