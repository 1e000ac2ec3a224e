#include "g1b/obstruction.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace g1b {

// ---- CocycleClass

CocycleClass CocycleClass::make(const TameContext& ctx, KummerClass alpha, KummerClass beta) {
  if (!ctx.valid()) throw PreconditionError("invalid_context", "tame context is empty");
  if (!ctx.same(alpha.context()) || !ctx.same(beta.context()))
    throw PreconditionError("context_violation", "class pair components from different contexts");
  return CocycleClass{ctx, std::move(alpha), std::move(beta)};
}

CocycleClass CocycleClass::trivial(const TameContext& ctx) {
  return make(ctx, KummerClass::trivial(ctx), KummerClass::trivial(ctx));
}

std::vector<CocycleClass> CocycleClass::enumerate(const TameContext& ctx) {
  std::vector<KummerClass> ks = KummerClass::enumerate(ctx);
  std::vector<CocycleClass> out;
  out.reserve(ks.size() * ks.size());
  for (const KummerClass& a : ks)
    for (const KummerClass& b : ks) out.push_back(CocycleClass{ctx, a, b});
  return out;
}

CocycleClass CocycleClass::operator+(const CocycleClass& o) const {
  if (!ctx.same(o.ctx))
    throw PreconditionError("context_violation", "adding class pairs from different contexts");
  return CocycleClass{ctx, alpha.mul(o.alpha), beta.mul(o.beta)};
}

CocycleClass CocycleClass::operator-() const {
  return CocycleClass{ctx, alpha.inverse(), beta.inverse()};
}

CocycleClass CocycleClass::times(i64 m) const {
  return CocycleClass{ctx, alpha.pow(m), beta.pow(m)};
}

bool CocycleClass::is_trivial() const { return alpha.is_trivial() && beta.is_trivial(); }

bool CocycleClass::operator==(const CocycleClass& o) const {
  return ctx.same(o.ctx) && alpha == o.alpha && beta == o.beta;
}

// ---- obstruction map

namespace {

void require_delta_inputs(const CocycleClass& xi, const LevelStructure& ls,
                          const DeltaPolicy& policy) {
  const TameContext& ctx = xi.ctx;
  if (!ctx.valid()) throw PreconditionError("invalid_context", "tame context is empty");
  if (ls.basis.n != ctx.n())
    throw PreconditionError("context_violation", "level-structure degree differs from context n");
  const Field& F = ls.E.field();
  if (F.degree() != 1 || F.characteristic() != ctx.p())
    throw PreconditionError("context_violation",
                            "level structure must live over the prime residue field F_p");
  if (ctx.f() != 1 || !ctx.mu_n_in_base())
    throw PreconditionError("context_violation", "obstruction needs f = 1 and n | p - 1");
  switch (policy.mode()) {
    case DeltaPolicy::Mode::OddN:
      if (ctx.n() % 2 == 0)
        throw UnsupportedPolicy("odd-n policy invoked with even n");
      break;
    case DeltaPolicy::Mode::Level2nPresent: {
      const auto& cert = policy.certificate();
      if (!cert.has_value())
        throw UnsupportedPolicy("level-2n policy without a certificate");
      if (cert->basis.n != 2 * ctx.n())
        throw UnsupportedPolicy("level certificate is not of level 2n");
      if (!cert->E.same(ls.E))
        throw UnsupportedPolicy("level-2n certificate lives on a different curve");
      break;
    }
    case DeltaPolicy::Mode::Unsupported:
      throw UnsupportedPolicy("no justification for dropping the correction term");
  }
}

}  // namespace

BrauerClass delta_t(const CocycleClass& xi, const LevelStructure& ls,
                    const DeltaPolicy& policy) {
  require_delta_inputs(xi, ls, policy);
  return symbol_invariant(xi.ctx, xi.alpha, xi.beta).times((i64)ls.c);
}

BrauerClass twisted_delta(const CocycleClass& xi0, const CocycleClass& a,
                          const LevelStructure& ls, const DeltaPolicy& policy) {
  // Intrinsic evaluation inside the xi0-twisted theta group: the twisted
  // quadratic map is the untwisted one corrected by the bilinear pairing
  // against the base point.  The twisting law delta_xi0(a) =
  // delta(a + xi0) - delta(xi0) is a theorem relating this route to the
  // two-call difference, not the definition used here.
  return delta_t(a, ls, policy) + pairing_pushforward(a, xi0, ls);
}

BrauerClass pairing_pushforward(const CocycleClass& a, const CocycleClass& b,
                                const LevelStructure& ls) {
  if (!a.ctx.same(b.ctx))
    throw PreconditionError("context_violation", "pairing arguments from different contexts");
  if (ls.basis.n != a.ctx.n())
    throw PreconditionError("context_violation", "level-structure degree differs from context n");
  BrauerClass s =
      symbol_invariant(a.ctx, a.alpha, b.beta) + symbol_invariant(a.ctx, b.alpha, a.beta);
  return s.times((i64)ls.c);
}

// ---- tame Galois group machinery

bool tame_galois_abelian(u64 p, u64 e, u64 f) {
  if (!is_prime_u64(p)) throw PreconditionError("bad_prime", "p must be prime");
  if (e == 0 || f == 0) throw PreconditionError("bad_degree", "e and f must be >= 1");
  if (gcd_u64(e, p) != 1)
    throw PreconditionError("wild_input", "ramification index must be coprime to p (tame case)");
  return powmod(p % e == 0 ? 0 : p % e, f, e) % e == 1 % e;
}

namespace {

// The metacyclic group G(e, f, c) on pairs (a, b) in Z/e x Z/f with
// (a1,b1)*(a2,b2) = (a1 + p^{b1} a2 + c*[b1+b2 >= f], b1+b2 mod f),
// i.e. generators t = (1,0), s = (0,1) with relations t^e = 1, s t s^-1 =
// t^p, s^f = t^c.  Elements are encoded as a + e*b.
struct MetaGroup {
  u64 e, f, c, p;
  u64 size() const { return e * f; }
  u64 id() const { return 0; }
  u64 mul(u64 x, u64 y) const {
    u64 a1 = x % e, b1 = x / e, a2 = y % e, b2 = y / e;
    u64 a = (a1 + mulmod(powmod(p % e, b1, e), a2, e)) % e;
    if (b1 + b2 >= f) a = (a + c) % e;
    return a + e * ((b1 + b2) % f);
  }
  u64 inv(u64 x) const {
    // brute force is fine at these sizes
    for (u64 y = 0; y < size(); ++y)
      if (mul(x, y) == id()) return y;
    throw InternalError("metacyclic element without inverse");
  }
  u64 elem_order(u64 x) const {
    u64 acc = x, k = 1;
    while (acc != id()) {
      acc = mul(acc, x);
      ++k;
      if (k > size()) throw InternalError("metacyclic order overflow");
    }
    return k;
  }
  bool associative() const {
    u64 N = size();
    for (u64 x = 0; x < N; ++x)
      for (u64 y = 0; y < N; ++y)
        for (u64 z = 0; z < N; ++z)
          if (mul(mul(x, y), z) != mul(x, mul(y, z))) return false;
    return true;
  }
  u64 generated_size(u64 x, u64 y) const {
    std::set<u64> seen{id()};
    std::vector<u64> frontier{id()};
    while (!frontier.empty()) {
      std::vector<u64> next;
      for (u64 g : frontier)
        for (u64 h : {mul(g, x), mul(g, y)})
          if (seen.insert(h).second) next.push_back(h);
      frontier = std::move(next);
    }
    return seen.size();
  }
};

// G isomorphic to D_n: contains r of order n and s of order 2 with
// s r s^-1 = r^-1 generating the whole group of order 2n.
bool is_dihedral(const MetaGroup& G, u64 n) {
  if (G.size() != 2 * n) return false;
  for (u64 r = 1; r < G.size(); ++r) {
    if (G.elem_order(r) != n) continue;
    u64 rinv = G.inv(r);
    for (u64 s = 1; s < G.size(); ++s) {
      if (G.elem_order(s) != 2) continue;
      if (G.mul(G.mul(s, r), G.inv(s)) != rinv) continue;
      if (G.generated_size(r, s) == 2 * n) return true;
    }
  }
  return false;
}

}  // namespace

bool dihedral_realizable(u64 p, u64 n) {
  if (!is_prime_u64(p)) throw PreconditionError("bad_prime", "p must be prime");
  if (n < 3 || n % 2 == 0) throw PreconditionError("bad_degree", "n must be odd and >= 3");
  if ((2 * n) % p == 0) throw PreconditionError("wild_input", "p must not divide 2n");
  for (u64 e = 1; e <= 2 * n; ++e) {
    if ((2 * n) % e != 0) continue;
    u64 f = 2 * n / e;
    // consistency of the tame parameters: the Frobenius action on the inertia
    // generator has order dividing f, and s^f = t^c is action-stable
    if (powmod(p % e, f, e) % e != 1 % e) continue;
    for (u64 c = 0; c < e; ++c) {
      if (mulmod(c, (p - 1) % e, e) != 0) continue;
      MetaGroup G{e, f, c, p};
      if (!G.associative())
        throw InternalError("metacyclic parameters produced a non-associative table");
      if (is_dihedral(G, n)) return true;
    }
  }
  return false;
}

// ---- exhaustive H^1 descent over the unramified quadratic extension

namespace {

// Corestriction (norm) to the base context: valuation doubles (unramified
// quadratic), the unit residue maps by the norm u -> u^(p+1).
KummerClass corestrict(const TameContext& base, const KummerClass& x) {
  FieldElem nu = x.unit_rep().pow((i64)(base.p() + 1));
  const auto& c = nu.coeffs();
  for (size_t i = 1; i < c.size(); ++i)
    if (c[i] != 0) throw InternalError("norm of a unit residue left the base field");
  return KummerClass::make(base, (i64)(2 * x.v()), base.residue_field().from_int(c[0]));
}

// Restriction from the base context to the quadratic one: same valuation,
// constant embedding of the unit residue.
KummerClass restrict_up(const TameContext& quad, const KummerClass& x) {
  FieldElem u = quad.residue_field().from_coeffs({x.unit_rep().coeffs()[0]});
  return KummerClass::make(quad, (i64)x.v(), u);
}

}  // namespace

std::vector<CocycleClass> twist_h1_exhaustive(u64 p, u64 n) {
  if (!is_prime_u64(p)) throw PreconditionError("bad_prime", "p must be prime");
  if (n < 3 || n % 2 == 0) throw PreconditionError("bad_degree", "n must be odd and >= 3");
  if ((2 * n) % p == 0) throw PreconditionError("wild_input", "p must not divide 2n");
  if ((p - 1) % n != 0)
    throw PreconditionError("context_violation", "descent scan needs n | p - 1");
  TameContext quad = TameContext::make(p, n, 2);
  TameContext base = TameContext::make(p, n, 1);
  i64 half = (i64)invmod(2 % n, n);

  std::vector<KummerClass> classes = KummerClass::enumerate(quad);
  std::vector<char> component_ok(classes.size(), 0);
  for (size_t i = 0; i < classes.size(); ++i) {
    const KummerClass& x = classes[i];
    // conjugation invariance: Frobenius acts by inversion
    if (x.frobenius() != x.inverse()) continue;
    // descent: x must be the restriction of the halved corestriction
    KummerClass down = corestrict(base, x).pow(half);
    if (restrict_up(quad, down) != x) continue;
    component_ok[i] = 1;
  }
  std::vector<CocycleClass> survivors;
  for (size_t i = 0; i < classes.size(); ++i) {
    if (!component_ok[i]) continue;
    for (size_t j = 0; j < classes.size(); ++j) {
      if (!component_ok[j]) continue;
      survivors.push_back(CocycleClass{quad, classes[i], classes[j]});
    }
  }
  return survivors;
}

// ---- composite certificate

namespace {
CertificateItem item(std::string cond, bool ok, std::string detail) {
  return CertificateItem{std::move(cond), ok, std::move(detail)};
}
}  // namespace

TwistCertificate twist_certificate(u64 p, u64 n) {
  TwistCertificate cert;
  cert.p = p;
  cert.n = n;

  bool p_prime = is_prime_u64(p);
  bool n_odd = (n >= 3) && (n % 2 == 1);
  bool tame = p_prime && n_odd && (2 * n) % p != 0;
  bool root = p_prime && n >= 2 && (p - 1) % n == 0;
  cert.items.push_back(item("n_odd", n_odd, "n = " + std::to_string(n)));
  cert.items.push_back(item("p_tame", tame, "p = " + std::to_string(p) + ", 2n = " + std::to_string(2 * n)));
  cert.items.push_back(item("unity_root_in_base", root, "n | p - 1 required"));
  if (!(n_odd && tame && root)) {
    for (const char* c : {"level_structure_witness", "symbol_witness",
                          "dihedral_not_realizable", "h1_survivors_trivial"})
      cert.items.push_back(item(c, false, "skipped: preconditions failed"));
    cert.ok = false;
    cert.delegated_n = n;
    return cert;
  }

  u64 delegated = n;
  for (u64 d = 3; d * d <= n; d += 2)
    if (n % d == 0) {
      delegated = d;
      break;
    }
  cert.delegated_n = delegated;
  if (delegated != n)
    cert.items.push_back(item("delegated_to_prime_divisor", true,
                              "group-theoretic conditions checked at n = " +
                                  std::to_string(delegated)));

  auto curves = full_level_search(n, p, p, 1);
  if (!curves.empty()) cert.witness_curve = curves.front();
  cert.items.push_back(item("level_structure_witness", !curves.empty(),
                            curves.empty() ? "no curve over F_p with full rational torsion"
                                           : "a4 = " + std::to_string(curves[0].a4) +
                                                 ", a6 = " + std::to_string(curves[0].a6)));

  bool symbol_ok = false;
  std::string symbol_detail = "solver failed";
  try {
    TameContext ctx = TameContext::make(p, n, 1);
    BrauerClass target = BrauerClass::make(1, (i64)n);
    auto witness = solve_symbol(target, ctx);
    BrauerClass recomputed = symbol_invariant(ctx, witness.first, witness.second);
    symbol_ok = (recomputed == target);
    cert.symbol_witness = witness;
    cert.symbol_value = recomputed;
    symbol_detail = "invariant " + recomputed.to_string();
  } catch (const PreconditionError& e) {
    symbol_detail = e.what();
  }
  cert.items.push_back(item("symbol_witness", symbol_ok, symbol_detail));

  bool dihedral = dihedral_realizable(p, delegated);
  cert.items.push_back(item("dihedral_not_realizable", !dihedral,
                            dihedral ? "D_n occurs as a tame Galois group"
                                     : "no metacyclic parameters realize D_n"));

  auto survivors = twist_h1_exhaustive(p, delegated);
  bool h1_ok = survivors.size() == 1 && survivors.front().is_trivial();
  cert.items.push_back(item("h1_survivors_trivial", h1_ok,
                            std::to_string(survivors.size()) + " survivor(s)"));

  cert.ok = true;
  for (const auto& it : cert.items)
    if (!it.ok) cert.ok = false;
  return cert;
}

}  // namespace g1b
