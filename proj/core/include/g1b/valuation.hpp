#pragma once
// Value-group combinatorics for the totally ramified symbol-tensor example:
// the rank-4 symplectic module over Z/n carrying the standard alternating
// block pairing, subgroups in canonical Howell normal form, orthogonal
// complements, the cyclic-splitting criterion, and the two-branch certificate
// that no cyclic candidate passes it.
//
// Ambient resolution: candidate cyclic value groups live in (Z/n^2)^4 (the
// finite window of the divisible hull in which every cyclic tame candidate's
// interaction with the n-torsion lattice V = (Z/n)^4 is visible); V embeds as
// the n-torsion (n*Z/n^2)^4, identified with (Z/n)^4 by dividing by n.

#include <cstdint>
#include <string>
#include <vector>

#include "g1b/arith.hpp"
#include "g1b/errors.hpp"

namespace g1b {

using Vec = std::vector<u64>;

// Subgroup of (Z/modulus)^rank in canonical Howell normal form: the basis is
// the unique reduced echelon system (pivots are divisors of the modulus,
// entries above pivots reduced mod the pivot, span closed under the scalar
// annihilators).  Two subgroups are equal iff their canonical bases match.
class Subgroup {
 public:
  Subgroup() = default;
  static Subgroup make(u64 modulus, u64 rank, const std::vector<Vec>& generators);
  static Subgroup zero(u64 modulus, u64 rank);
  static Subgroup full(u64 modulus, u64 rank);

  u64 modulus() const { return m_; }
  u64 rank() const { return rank_; }
  const std::vector<Vec>& basis() const { return basis_; }

  u64 order() const;
  bool contains(const Vec& v) const;
  bool subset_of(const Subgroup& o) const;
  bool operator==(const Subgroup& o) const;
  bool operator!=(const Subgroup& o) const { return !(*this == o); }

  // All elements (order() of them), in deterministic order.
  std::vector<Vec> elements() const;

 private:
  u64 m_ = 0;
  u64 rank_ = 0;
  std::vector<Vec> basis_;
};

// The rank-4 module over Z/n with Gram matrix [[0,1],[-1,0]] + [[0,1],[-1,0]]
// (block diagonal), the commutator pairing of a tensor of two degree-n
// symbols.  Alternating and nondegenerate for every n >= 2.
struct SymplecticModule {
  u64 n = 0;
  u64 rank = 4;
  std::vector<Vec> gram;

  static SymplecticModule make(u64 n);
  // sum_{i,j} u_i * gram[i][j] * w_j mod n
  u64 pair(const Vec& u, const Vec& w) const;
  bool alternating() const;
  bool nondegenerate() const;  // det(gram) is a unit mod n
};

// H^perp = {v in (Z/n)^4 : pair(v, h) = 0 for all h in H}, via the Howell
// kernel of the linear system.  |H| * |H^perp| = n^4.
Subgroup orth_complement(const SymplecticModule& M, const Subgroup& H);

// The cyclic-splitting criterion for a candidate value group C inside the
// ambient (Z/n^2)^4: compute D = (C intersect n-torsion) / n inside
// V = (Z/n)^4 and return whether orth_complement(D) is contained in D.
bool splitting_check(const SymplecticModule& M, const Subgroup& C);

struct NoncyclicReport {
  u64 n = 0;
  bool exhaustive_ran = false;
  u64 cyclic_subgroups_scanned = 0;  // distinct cyclic subgroups of (Z/n^2)^4
  u64 splitting_found = 0;           // cyclic candidates passing the criterion
  u64 max_intersection_order = 0;    // max |C cap V| observed
  u64 min_complement_order = 0;      // min |(C cap V)^perp| observed
  bool counting_branch_noncyclic = false;
  bool branches_agree = false;
};

// Two independent proofs that no cyclic candidate splits the tensor algebra:
// (i) exhaustive enumeration of every cyclic subgroup of (Z/n^2)^4 with
// splitting_check on each (refused above the desk bound n <= 5); (ii) the
// counting argument: |C cap V| <= n forces |(C cap V)^perp| >= n^3, and an
// exponent-n group of that order is non-cyclic and cannot fit inside the
// cyclic C cap V.  The report cross-checks the branches.
NoncyclicReport noncyclic_certificate(u64 n, bool exhaustive = true);

}  // namespace g1b
