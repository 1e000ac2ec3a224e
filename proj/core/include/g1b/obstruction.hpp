#pragma once
// The period-index obstruction for genus-one data over a tame local context:
// the map delta sending a cocycle class (alpha, beta) to c * invariant(alpha,
// beta), its twisted form, the induced symmetric pairing, and the machinery
// certifying nonexistence of nontrivial quadratic-twist classes (abelianness
// of tame Galois groups, dihedral realizability, exhaustive H^1 descent).

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "g1b/brauer.hpp"
#include "g1b/ec.hpp"

namespace g1b {

// Class pair (alpha, beta) of Kummer classes over a shared context, written
// additively (the group law is componentwise class multiplication).
struct CocycleClass {
  TameContext ctx;
  KummerClass alpha, beta;

  static CocycleClass make(const TameContext& ctx, KummerClass alpha, KummerClass beta);
  static CocycleClass trivial(const TameContext& ctx);
  // All (n * gcd(n, q-1))^2 classes, alpha-major canonical order.
  static std::vector<CocycleClass> enumerate(const TameContext& ctx);

  CocycleClass operator+(const CocycleClass& o) const;
  CocycleClass operator-() const;
  CocycleClass times(i64 m) const;
  bool is_trivial() const;
  bool operator==(const CocycleClass& o) const;
  bool operator!=(const CocycleClass& o) const { return !(*this == o); }
};

// Justification that the correction term in the obstruction formula vanishes.
// OddN applies when n is odd; Level2nPresent carries a full level structure of
// level 2n on the same curve as evidence.  delta_t refuses to guess otherwise.
class DeltaPolicy {
 public:
  enum class Mode { OddN, Level2nPresent, Unsupported };

  static DeltaPolicy odd_n() { return DeltaPolicy(Mode::OddN, std::nullopt); }
  static DeltaPolicy level_2n(LevelStructure certificate) {
    return DeltaPolicy(Mode::Level2nPresent, std::move(certificate));
  }
  static DeltaPolicy unsupported() { return DeltaPolicy(Mode::Unsupported, std::nullopt); }

  Mode mode() const { return mode_; }
  const std::optional<LevelStructure>& certificate() const { return cert_; }

 private:
  DeltaPolicy(Mode m, std::optional<LevelStructure> c) : mode_(m), cert_(std::move(c)) {}
  Mode mode_;
  std::optional<LevelStructure> cert_;
};

// delta(xi) = c * invariant(alpha, beta), where c is the level-structure
// constant (c = 1 after symplectify).  The policy must justify dropping the
// correction term; otherwise UnsupportedPolicy is thrown.  Requires
// ls.basis.n == ctx.n(), a prime residue field matching the context, and
// n | p - 1.
BrauerClass delta_t(const CocycleClass& xi, const LevelStructure& ls,
                    const DeltaPolicy& policy);

// delta computed in the xi0-twisted theta group: delta(a + xi0) - delta(xi0).
BrauerClass twisted_delta(const CocycleClass& xi0, const CocycleClass& a,
                          const LevelStructure& ls, const DeltaPolicy& policy);

// The symmetric bilinear form induced by the pairing on class pairs:
// c * (invariant(a.alpha, b.beta) + invariant(b.alpha, a.beta)).  Equals
// delta(a+b) - delta(a) - delta(b) whenever delta is defined.
BrauerClass pairing_pushforward(const CocycleClass& a, const CocycleClass& b,
                                const LevelStructure& ls);

// Whether the tame extension of Q_p with ramification index e and residue
// degree f has abelian Galois group: true iff p^f = 1 mod e.  Requires
// gcd(e, p) = 1 (tameness).
bool tame_galois_abelian(u64 p, u64 e, u64 f);

// Whether the dihedral group D_n (order 2n, n odd >= 3) occurs as a tame
// Galois group over Q_p: enumerates the metacyclic parameter triples (e, f, c)
// with e * f = 2n, e | p^f - 1, c * (p - 1) = 0 mod e, and tests each group
// against the dihedral presentation.  Requires p prime not dividing 2n.
// Always false for p = 1 mod n.
bool dihedral_realizable(u64 p, u64 n);

// Enumerates all n^4 class pairs over the unramified quadratic context
// (f = 2) and returns those surviving both the conjugation-invariance
// condition (Frobenius acts as inversion) and the norm-compatibility descent
// condition.  Requires n odd, p not dividing 2n, n | p - 1.  The expected
// survivor set is exactly the trivial pair.
std::vector<CocycleClass> twist_h1_exhaustive(u64 p, u64 n);

struct CertificateItem {
  std::string condition;  // stable identifier
  bool ok = false;
  std::string detail;
};

// Machine-checkable certificate that no nontrivial quadratic-twist class
// exists for (p, n).  Failures never throw; each condition is recorded with
// its outcome.  Composite odd n delegates the group-theoretic conditions to
// the smallest prime divisor.
struct TwistCertificate {
  u64 p = 0;
  u64 n = 0;
  u64 delegated_n = 0;  // smallest prime divisor of n (= n when n is prime)
  bool ok = false;      // all conditions verified
  std::vector<CertificateItem> items;
  std::optional<FullLevelCurve> witness_curve;
  std::optional<std::pair<KummerClass, KummerClass>> symbol_witness;
  std::optional<BrauerClass> symbol_value;  // recomputed invariant of the witness
};

TwistCertificate twist_certificate(u64 p, u64 n);

}  // namespace g1b
