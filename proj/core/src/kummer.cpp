#include "g1b/kummer.hpp"

#include <algorithm>

namespace g1b {
namespace detail {

struct TameContextData {
  u64 p = 0;
  u64 n = 0;
  unsigned f = 1;
  Field residue;
  bool mu_n_in_base = false;
  u64 coset_count = 0;
  std::vector<u64> coset_min;          // unit key -> canonical key (index 0 unused)
  std::vector<FieldElem> coset_reps;   // sorted canonical representatives
};

}  // namespace detail

using detail::TameContextData;

TameContext TameContext::make(u64 p, u64 n, unsigned f) {
  if (p == 2 || !is_prime_u64(p))
    throw PreconditionError("not_odd_prime", "tame context requires an odd prime p");
  if (n < 2) throw PreconditionError("bad_degree", "tame context requires n >= 2");
  if (n % p == 0)
    throw PreconditionError("wild_input", "tame context requires gcd(n, p) = 1");
  if (f < 1) throw PreconditionError("bad_degree", "residue degree must be >= 1");
  u64 q = 0;
  if (!checked_pow_u64(p, f, u64(1) << 24, &q))
    throw BudgetExceeded("tame context bounded by p^f < 2^24");

  auto d = std::make_shared<TameContextData>();
  d->p = p;
  d->n = n;
  d->f = f;
  d->residue = Field::make(p, f);
  d->mu_n_in_base = ((q - 1) % n == 0);

  const Field& F = d->residue;
  // subgroup of n-th powers
  std::vector<char> is_nth_power(q, 0);
  for (u64 k = 1; k < q; ++k) {
    FieldElem x = F.from_key(k);
    is_nth_power[x.pow((i64)n).key()] = 1;
  }
  std::vector<u64> subgroup;
  for (u64 k = 1; k < q; ++k)
    if (is_nth_power[k]) subgroup.push_back(k);
  d->coset_count = (q - 1) / subgroup.size();

  d->coset_min.assign(q, 0);
  for (u64 k = 1; k < q; ++k) {
    if (d->coset_min[k] != 0) continue;
    // k is the minimum of a fresh coset
    FieldElem x = F.from_key(k);
    for (u64 h : subgroup) {
      FieldElem y = x * F.from_key(h);
      d->coset_min[y.key()] = k;
    }
    d->coset_reps.push_back(x);
  }
  std::sort(d->coset_reps.begin(), d->coset_reps.end());
  return TameContext(std::move(d));
}

u64 TameContext::p() const { return d_->p; }
u64 TameContext::n() const { return d_->n; }
unsigned TameContext::f() const { return d_->f; }
bool TameContext::mu_n_in_base() const { return d_->mu_n_in_base; }
Field TameContext::residue_field() const { return d_->residue; }
u64 TameContext::unit_coset_count() const { return d_->coset_count; }
const std::vector<FieldElem>& TameContext::unit_coset_reps() const { return d_->coset_reps; }

FieldElem TameContext::canonicalize_unit(const FieldElem& u) const {
  if (!u.field().same(d_->residue))
    throw Error("unit residue from a different field than the context");
  if (u.is_zero()) throw PreconditionError("not_a_unit", "zero is not a unit residue");
  return d_->residue.from_key(d_->coset_min[u.key()]);
}

bool TameContext::same(const TameContext& o) const {
  return d_ && o.d_ && d_->p == o.d_->p && d_->n == o.d_->n && d_->f == o.d_->f;
}

KummerClass KummerClass::make(const TameContext& ctx, i64 v, const FieldElem& u) {
  u64 n = ctx.n();
  u64 vr = (u64)(((v % (i64)n) + (i64)n) % (i64)n);
  return KummerClass(ctx, vr, ctx.canonicalize_unit(u));
}
KummerClass KummerClass::trivial(const TameContext& ctx) {
  return make(ctx, 0, ctx.residue_field().one());
}
KummerClass KummerClass::uniformizer(const TameContext& ctx) {
  return make(ctx, 1, ctx.residue_field().one());
}
KummerClass KummerClass::unit(const TameContext& ctx, const FieldElem& u) {
  return make(ctx, 0, u);
}

std::vector<KummerClass> KummerClass::enumerate(const TameContext& ctx) {
  std::vector<KummerClass> out;
  out.reserve(ctx.n() * ctx.unit_coset_reps().size());
  for (u64 v = 0; v < ctx.n(); ++v)
    for (const FieldElem& r : ctx.unit_coset_reps()) out.push_back(make(ctx, (i64)v, r));
  return out;
}

KummerClass KummerClass::mul(const KummerClass& o) const {
  if (!ctx_.same(o.ctx_)) throw Error("Kummer classes from different contexts");
  return make(ctx_, (i64)(v_ + o.v_), u_ * o.u_);
}

KummerClass KummerClass::pow(i64 e) const {
  // unit part: exponent reduced in the residue field; valuation: v*e mod n
  i64 vr = (i64)((((i128)v_ * e) % (i64)ctx_.n() + (i64)ctx_.n()) % (i64)ctx_.n());
  return make(ctx_, vr, u_.pow(e));
}

KummerClass KummerClass::inverse() const { return pow(-1); }

bool KummerClass::is_trivial() const {
  if (v_ != 0) return false;
  u64 q = ctx_.residue_field().order();
  u64 d = gcd_u64(ctx_.n(), q - 1);
  return u_.pow((i64)((q - 1) / d)).is_one();
}

bool KummerClass::operator==(const KummerClass& o) const {
  if (!ctx_.same(o.ctx_)) throw Error("Kummer classes from different contexts");
  return v_ == o.v_ && u_ == o.u_;
}
bool KummerClass::operator<(const KummerClass& o) const {
  if (v_ != o.v_) return v_ < o.v_;
  return u_ < o.u_;
}

KummerClass KummerClass::frobenius() const {
  return make(ctx_, (i64)v_, u_.frobenius());
}

}  // namespace g1b
