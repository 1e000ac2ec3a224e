#include "g1b/brauer.hpp"

#include <boost/rational.hpp>

#include <numeric>

namespace g1b {

namespace {
using Rat = boost::rational<long long>;

BrauerClass reduce_mod_one(const Rat& r) {
  long long num = r.numerator(), den = r.denominator();  // boost keeps den > 0, reduced
  num %= den;
  if (num < 0) num += den;
  long long g = std::gcd(num, den);
  return BrauerClass::make(num / g, den / g);
}
}  // namespace

BrauerClass BrauerClass::make(i64 num, i64 den) {
  if (den < 1) throw PreconditionError("bad_fraction", "denominator must be >= 1");
  BrauerClass b;
  num %= den;
  if (num < 0) num += den;
  i64 g = std::gcd(num, den);
  b.num_ = num / g;
  b.den_ = den / g;
  if (b.num_ == 0) b.den_ = 1;
  return b;
}

BrauerClass BrauerClass::operator+(const BrauerClass& o) const {
  return reduce_mod_one(Rat(num_, den_) + Rat(o.num_, o.den_));
}

BrauerClass BrauerClass::operator-(const BrauerClass& o) const {
  return reduce_mod_one(Rat(num_, den_) - Rat(o.num_, o.den_));
}

BrauerClass BrauerClass::operator-() const { return reduce_mod_one(-Rat(num_, den_)); }

BrauerClass BrauerClass::times(i64 m) const { return reduce_mod_one(Rat(num_, den_) * m); }

std::string BrauerClass::to_string() const {
  return std::to_string(num_) + "/" + std::to_string(den_);
}

namespace {
void require_symbol_context(const TameContext& ctx) {
  if (!ctx.valid()) throw PreconditionError("invalid_context", "tame context is empty");
  if (ctx.f() != 1)
    throw PreconditionError("context_violation",
                            "tame symbols are computed over the prime residue field (f = 1)");
  if (!ctx.mu_n_in_base())
    throw PreconditionError("context_violation", "tame symbols need n | p - 1");
}
}  // namespace

FieldElem tame_hilbert_symbol(const TameContext& ctx, const KummerClass& a,
                              const KummerClass& b) {
  require_symbol_context(ctx);
  if (!ctx.same(a.context()) || !ctx.same(b.context()))
    throw PreconditionError("context_violation", "symbol arguments from a different context");
  u64 va = a.v(), vb = b.v();
  FieldElem val = b.unit_rep().pow((i64)va) * a.unit_rep().pow(-(i64)vb);
  if ((va & 1) && (vb & 1)) val = -val;
  return val.pow((i64)((ctx.p() - 1) / ctx.n()));
}

FieldElem distinguished_symbol_root(const TameContext& ctx) {
  require_symbol_context(ctx);
  const Field F = ctx.residue_field();
  return tame_hilbert_symbol(ctx, KummerClass::uniformizer(ctx),
                             KummerClass::unit(ctx, F.smallest_generator()));
}

BrauerClass symbol_invariant(const TameContext& ctx, const KummerClass& a,
                             const KummerClass& b) {
  FieldElem s = tame_hilbert_symbol(ctx, a, b);
  FieldElem w = distinguished_symbol_root(ctx);
  const Field F = ctx.residue_field();
  FieldElem acc = F.one();
  u64 n = ctx.n();
  for (u64 k = 0; k < n; ++k) {
    if (acc == s) return BrauerClass::make((i64)k, (i64)n);
    acc = acc * w;
  }
  throw InternalError("symbol value is not a power of the distinguished root");
}

BrauerClass degree_shift_invariant(const TameContext& ctx, const KummerClass& a,
                                   const KummerClass& b, u64 m) {
  require_symbol_context(ctx);
  if (m == 0) throw PreconditionError("bad_degree", "shift multiplier must be >= 1");
  u64 n = ctx.n(), nm = n * m;
  if ((ctx.p() - 1) % nm != 0)
    throw PreconditionError("context_violation", "degree shift needs nm | p - 1");
  BrauerClass base = symbol_invariant(ctx, a, b);
  TameContext up = TameContext::make(ctx.p(), nm, 1);
  KummerClass a_up = KummerClass::make(up, (i64)(a.v() * m), a.unit_rep().pow((i64)m));
  KummerClass b_up = KummerClass::make(up, (i64)b.v(), b.unit_rep());
  BrauerClass shifted = symbol_invariant(up, a_up, b_up);
  if (base != shifted)
    throw InternalError("degree-shifted invariant disagrees with the degree-n invariant");
  return base;
}

std::pair<KummerClass, KummerClass> solve_symbol(const BrauerClass& target,
                                                 const TameContext& ctx) {
  require_symbol_context(ctx);
  if (target.is_zero()) return {KummerClass::trivial(ctx), KummerClass::trivial(ctx)};
  u64 n = ctx.n();
  if (n % (u64)target.den() != 0)
    throw PreconditionError("no_solution", "target denominator does not divide n");
  KummerClass pi = KummerClass::uniformizer(ctx);
  for (const FieldElem& u : ctx.unit_coset_reps()) {
    KummerClass b = KummerClass::unit(ctx, u);
    if (symbol_invariant(ctx, pi, b) != target) continue;
    // re-verify the witness through raw modular arithmetic rather than the
    // field layer: symbol(pi, u) = u^((p-1)/n) and w = g^((p-1)/n)
    u64 p = ctx.p();
    u64 s = powmod(u.coeffs()[0], (p - 1) / n, p);
    u64 w = powmod(ctx.residue_field().smallest_generator().coeffs()[0], (p - 1) / n, p);
    u64 acc = 1, k = 0;
    while (acc != s) {
      acc = mulmod(acc, w, p);
      if (++k >= n) throw InternalError("solve_symbol witness failed recomputation");
    }
    if (BrauerClass::make((i64)k, (i64)n) != target)
      throw InternalError("solve_symbol witness failed recomputation");
    return {pi, b};
  }
  throw PreconditionError("no_solution", "no unit residue attains the target invariant");
}

}  // namespace g1b
