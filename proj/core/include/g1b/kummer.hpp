#pragma once
// Classes of Q_p^x / (Q_p^x)^n in the tame case gcd(n, p) = 1, and the same
// for the unramified extension of residue degree f.  Such a class is exactly
// a pair (valuation mod n, unit residue class mod n-th powers): a unit is an
// n-th power iff its residue is one (Hensel, using gcd(n,p) = 1), so classes
// live on the residue field F_{p^f}.
//
// Canonical representative: the unit part is the smallest element (canonical
// field-element order) of its coset u * (F_{p^f}^x)^n.  The Kummer-duality
// orientation used throughout the library is the canonical primitive root
// zeta_n = Field::unity_root(n); see brauer.hpp for how symbol invariants are
// normalized on top of this.
//
// Contexts precompute the coset-minimum table; construction is O(q) time and
// memory for q = p^f and is guarded by a budget bound (q <= 2^24).

#include <cstdint>
#include <memory>
#include <vector>

#include "g1b/ff.hpp"

namespace g1b {

namespace detail {
struct TameContextData;
}

class KummerClass;

class TameContext {
 public:
  TameContext() = default;

  // Requires: p an odd prime, n >= 2, gcd(n, p) = 1, f >= 1, p^f <= 2^24.
  static TameContext make(u64 p, u64 n, unsigned f = 1);

  bool valid() const { return d_ != nullptr; }
  u64 p() const;
  u64 n() const;
  unsigned f() const;
  // True iff mu_n lies in the modeled field, i.e. n | p^f - 1.
  bool mu_n_in_base() const;
  Field residue_field() const;
  // Number of unit-residue cosets mod n-th powers: gcd(n, p^f - 1).
  u64 unit_coset_count() const;
  // The sorted canonical representatives of the unit cosets.
  const std::vector<FieldElem>& unit_coset_reps() const;
  // Canonical coset minimum of a nonzero residue u.
  FieldElem canonicalize_unit(const FieldElem& u) const;

  bool same(const TameContext& o) const;

 private:
  friend class KummerClass;
  explicit TameContext(std::shared_ptr<const detail::TameContextData> d) : d_(std::move(d)) {}
  std::shared_ptr<const detail::TameContextData> d_;
};

class KummerClass {
 public:
  KummerClass() = default;

  // Class of pi^v * u (pi the uniformizer, u a unit with the given residue).
  // v may be any integer; u must be nonzero.  Reduces to canonical form.
  static KummerClass make(const TameContext& ctx, i64 v, const FieldElem& u);
  static KummerClass trivial(const TameContext& ctx);
  static KummerClass uniformizer(const TameContext& ctx);
  static KummerClass unit(const TameContext& ctx, const FieldElem& u);
  // All n * gcd(n, q-1) classes, ordered by (v, unit rep).
  static std::vector<KummerClass> enumerate(const TameContext& ctx);

  bool valid() const { return ctx_.valid(); }
  const TameContext& context() const { return ctx_; }
  u64 v() const { return v_; }
  const FieldElem& unit_rep() const { return u_; }

  KummerClass mul(const KummerClass& o) const;
  KummerClass pow(i64 e) const;
  KummerClass inverse() const;
  bool is_trivial() const;
  bool operator==(const KummerClass& o) const;
  bool operator!=(const KummerClass& o) const { return !(*this == o); }
  // Deterministic order: (v, unit key).
  bool operator<(const KummerClass& o) const;

  // Residue Frobenius x -> x^p applied to the unit part (the Galois action of
  // Frob_p on the unramified context; valuations are fixed).
  KummerClass frobenius() const;

 private:
  KummerClass(TameContext ctx, u64 v, FieldElem u)
      : ctx_(std::move(ctx)), v_(v), u_(std::move(u)) {}
  TameContext ctx_;
  u64 v_ = 0;
  FieldElem u_;
};

}  // namespace g1b
