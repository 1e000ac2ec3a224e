#pragma once
// Elliptic curves in short Weierstrass form y^2 = x^3 + a4 x + a6 over
// F_{p^r}, char > 3, with exact group law, point counting, rational torsion
// bases, Weil pairings (Miller's algorithm with a deterministic shift
// schedule), full level-structure search, and quadratic twists.
//
// Determinism: every search in this module scans in the canonical element /
// point order (points ordered infinity-first, then by (x.key, y.key)), so all
// outputs are reproducible bit-for-bit, independent of thread count.

#include <cstdint>
#include <optional>
#include <vector>

#include "g1b/ff.hpp"

namespace g1b {

struct Point {
  bool infinity = true;
  FieldElem x, y;  // valid iff !infinity

  static Point at_infinity() { return Point{}; }
  static Point affine(FieldElem px, FieldElem py) { return Point{false, std::move(px), std::move(py)}; }
};

bool point_eq(const Point& a, const Point& b);
// Canonical point order: infinity first, then (x.key, y.key).
bool point_less(const Point& a, const Point& b);

class Curve {
 public:
  Curve() = default;
  // Requires char(F) > 3 and nonzero discriminant (4 a4^3 + 27 a6^2 != 0).
  static Curve make(const Field& F, const FieldElem& a4, const FieldElem& a6);

  bool valid() const { return F_.valid(); }
  const Field& field() const { return F_; }
  const FieldElem& a4() const { return a4_; }
  const FieldElem& a6() const { return a6_; }
  bool same(const Curve& o) const;

  bool on_curve(const Point& P) const;
  Point negate(const Point& P) const;
  Point add(const Point& P, const Point& Q) const;  // throws on off-curve input
  Point mul(i64 k, const Point& P) const;
  // x^3 + a4 x + a6
  FieldElem rhs(const FieldElem& x) const;

 private:
  Curve(Field F, FieldElem a4, FieldElem a6)
      : F_(std::move(F)), a4_(std::move(a4)), a6_(std::move(a6)) {}
  Field F_;
  FieldElem a4_, a6_;
};

enum class OrderMethod { Auto, BruteForce, BabyStepGiantStep };

// #E(F_q).  BruteForce is O(q) and allowed for q <= 10^7; larger fields use
// baby-step giant-step over the Hasse interval with lcm-of-point-orders
// disambiguation (plus the quadratic-twist refinement).  Auto picks brute
// force for q <= 2*10^5.  Throws BudgetExceeded if the method cannot certify
// a unique order within its budget.
u64 group_order(const Curve& E, OrderMethod method = OrderMethod::Auto);

struct TorsionBasis {
  u64 n = 0;
  Point T, S;
};

// Deterministic basis of E[n](F_q) when the full n-torsion is rational:
// T is the lexicographically smallest point of exact order n, S the smallest
// point with e_n(T, S) of exact order n.  n = 1 returns (O, O).  Throws
// FullTorsionAbsent otherwise (including the fast n-not-dividing-(q-1) path).
TorsionBasis torsion_basis(const Curve& E, u64 n);

// All rational points killed by n (brute force x-scan; used by torsion_basis
// and exposed for tests).
std::vector<Point> n_torsion_points(const Curve& E, u64 n);

// Weil pairing e_n(P, Q) for P, Q in E[n](F_q), computed with Miller's
// algorithm on shifted divisors; degenerate evaluations retry along the
// deterministic shift schedule.  Orientation is fixed by this implementation
// once and for all (level-structure constants absorb it).
FieldElem weil_pairing(const Curve& E, const Point& P, const Point& Q, u64 n);

struct FullLevelCurve {
  u64 p = 0;
  u64 a4 = 0, a6 = 0;
};

// Scans primes p in [p_min, p_max] with p = 1 mod n and p not dividing 6n;
// for each, scans (a4, a6) in lexicographic order and returns curves whose
// full n-torsion is rational, up to per_prime_limit curves per prime (0 means
// unlimited).  Parallelizes over primes (threads = 0 reads G1B_THREADS, else
// 1); the merge order is by prime then scan order, so output is deterministic.
std::vector<FullLevelCurve> full_level_search(u64 n, u64 p_min, u64 p_max,
                                              u64 per_prime_limit = 0, unsigned threads = 0);

struct LevelStructure {
  Curve E;
  TorsionBasis basis;
  FieldElem zeta;  // canonical primitive n-th root in the base field
  u64 c = 0;       // e_n(T, S) = zeta^c, gcd(c, n) = 1
};

// Requires n | q - 1 and full rational n-torsion.
LevelStructure level_structure(const Curve& E, u64 n);
// Rescales T by c^{-1} so that e_n(T', S) = zeta exactly; idempotent.
LevelStructure symplectify(const LevelStructure& ls);

// y^2 = x^3 + d^2 a4 x + d^3 a6 for a non-square d.
Curve quadratic_twist(const Curve& E, const FieldElem& d);

}  // namespace g1b
