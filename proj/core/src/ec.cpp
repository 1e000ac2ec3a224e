#include "g1b/ec.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <future>
#include <map>
#include <numeric>
#include <string>

namespace g1b {

bool point_eq(const Point& a, const Point& b) {
  if (a.infinity || b.infinity) return a.infinity == b.infinity;
  return a.x == b.x && a.y == b.y;
}

bool point_less(const Point& a, const Point& b) {
  if (a.infinity != b.infinity) return a.infinity;
  if (a.infinity) return false;
  if (a.x != b.x) return a.x < b.x;
  return a.y < b.y;
}

Curve Curve::make(const Field& F, const FieldElem& a4, const FieldElem& a6) {
  if (F.characteristic() <= 3)
    throw PreconditionError("bad_characteristic", "short Weierstrass model needs char > 3");
  FieldElem four = F.from_int(4), twentyseven = F.from_int(27);
  FieldElem disc = four * a4 * a4 * a4 + twentyseven * a6 * a6;
  if (disc.is_zero())
    throw PreconditionError("singular_curve", "discriminant vanishes: 4 a4^3 + 27 a6^2 = 0");
  return Curve(F, a4, a6);
}

bool Curve::same(const Curve& o) const {
  return F_.same(o.F_) && a4_ == o.a4_ && a6_ == o.a6_;
}

FieldElem Curve::rhs(const FieldElem& x) const { return (x * x + a4_) * x + a6_; }

bool Curve::on_curve(const Point& P) const {
  if (P.infinity) return true;
  return P.y * P.y == rhs(P.x);
}

Point Curve::negate(const Point& P) const {
  if (P.infinity) return P;
  return Point::affine(P.x, -P.y);
}

Point Curve::add(const Point& P, const Point& Q) const {
  if (!on_curve(P) || !on_curve(Q))
    throw PreconditionError("off_curve", "point is not on the curve");
  if (P.infinity) return Q;
  if (Q.infinity) return P;
  FieldElem lambda;
  if (P.x == Q.x) {
    if (P.y == -Q.y) return Point::at_infinity();
    // doubling with y != 0
    FieldElem three = F_.from_int(3), two = F_.from_int(2);
    lambda = (three * P.x * P.x + a4_) * (two * P.y).inv();
  } else {
    lambda = (Q.y - P.y) * (Q.x - P.x).inv();
  }
  FieldElem x3 = lambda * lambda - P.x - Q.x;
  FieldElem y3 = lambda * (P.x - x3) - P.y;
  return Point::affine(x3, y3);
}

Point Curve::mul(i64 k, const Point& P) const {
  if (P.infinity || k == 0) return Point::at_infinity();
  Point base = P;
  u64 kk;
  if (k < 0) {
    base = negate(P);
    kk = (u64)(-(k + 1)) + 1;  // |k| without signed overflow at INT64_MIN
  } else {
    kk = (u64)k;
  }
  Point acc = Point::at_infinity();
  while (kk) {
    if (kk & 1) acc = add(acc, base);
    kk >>= 1;
    if (kk) base = add(base, base);
  }
  return acc;
}

// ---- point counting

namespace {

u64 brute_order_prime_field(const Curve& E) {
  u64 p = E.field().characteristic();
  u64 a4 = E.a4().coeffs()[0], a6 = E.a6().coeffs()[0];
  std::vector<char> sq(p, 0);
  for (u64 y = 0; y <= p / 2; ++y) sq[mulmod(y, y, p)] = 1;
  u64 count = 1;  // infinity
  for (u64 x = 0; x < p; ++x) {
    u64 t = addmod(mulmod(addmod(mulmod(x, x, p), a4, p), x, p), a6, p);
    if (t == 0)
      count += 1;
    else if (sq[t])
      count += 2;
  }
  return count;
}

u64 brute_order_generic(const Curve& E) {
  const Field& F = E.field();
  u64 q = F.order();
  u64 count = 1;
  for (u64 xk = 0; xk < q; ++xk) {
    FieldElem t = E.rhs(F.from_key(xk));
    if (t.is_zero())
      count += 1;
    else if (t.is_square())
      count += 2;
  }
  return count;
}

// Deterministic affine point generator: scans x keys upward, yields the
// smaller square root first.
class PointScan {
 public:
  explicit PointScan(const Curve& E) : E_(E), q_(E.field().order()) {}
  std::optional<Point> next() {
    while (true) {
      if (pending_.has_value()) {
        Point P = *pending_;
        pending_.reset();
        return P;
      }
      if (xk_ >= q_) return std::nullopt;
      FieldElem x = E_.field().from_key(xk_++);
      FieldElem t = E_.rhs(x);
      if (t.is_zero()) return Point::affine(x, E_.field().zero());
      if (!t.is_square()) continue;
      FieldElem y = t.sqrt();
      FieldElem y2 = -y;
      if (y2 < y) std::swap(y, y2);
      pending_ = Point::affine(x, y2);
      return Point::affine(x, y);
    }
  }

 private:
  const Curve& E_;
  u64 q_;
  u64 xk_ = 0;
  std::optional<Point> pending_;
};

struct PointKey {
  bool inf;
  u64 x, y;
  bool operator<(const PointKey& o) const {
    if (inf != o.inf) return inf;
    if (x != o.x) return x < o.x;
    return y < o.y;
  }
};
PointKey key_of(const Point& P) {
  if (P.infinity) return {true, 0, 0};
  return {false, P.x.key(), P.y.key()};
}

// All k in [lo, hi] with k*P = O, by baby-step giant-step.
std::vector<u64> kill_multiples_in_interval(const Curve& E, const Point& P, u64 lo, u64 hi) {
  u64 count = hi - lo + 1;
  u64 m = isqrt_u64(count) + 1;
  std::map<PointKey, u64> baby;
  Point ip = Point::at_infinity();
  for (u64 i = 0; i < m; ++i) {
    baby.emplace(key_of(ip), i);  // keeps smallest i
    ip = E.add(ip, P);
  }
  Point step = E.mul((i64)m, P);
  Point W = E.mul((i64)lo, P);
  std::vector<u64> ks;
  for (u64 j = 0; lo + j * m <= hi; ++j) {
    auto it = baby.find(key_of(E.negate(W)));
    if (it != baby.end()) {
      u64 k = lo + j * m + it->second;
      if (k <= hi) ks.push_back(k);
    }
    W = E.add(W, step);
  }
  std::sort(ks.begin(), ks.end());
  ks.erase(std::unique(ks.begin(), ks.end()), ks.end());
  return ks;
}

u64 exact_order_from_multiple(const Curve& E, const Point& P, u64 multiple) {
  u64 ord = multiple;
  for (auto [pr, e] : factorize_u64(multiple)) {
    for (int i = 0; i < e; ++i) {
      if (ord % pr == 0 && E.mul((i64)(ord / pr), P).infinity)
        ord /= pr;
      else
        break;
    }
  }
  return ord;
}

u64 lcm_u64(u64 a, u64 b) { return a / gcd_u64(a, b) * b; }

std::vector<u64> multiples_in_interval(u64 L, u64 lo, u64 hi) {
  std::vector<u64> out;
  for (u64 k = (lo + L - 1) / L * L; k <= hi; k += L) out.push_back(k);
  return out;
}

u64 bsgs_order(const Curve& E) {
  const Field& F = E.field();
  u64 q = F.order();
  u64 B = isqrt_u64(4 * q) + 1;
  u64 lo = q + 1 > B ? q + 1 - B : 1;
  u64 hi = q + 1 + B;

  u64 L = 1;
  PointScan scan(E);
  std::optional<Curve> twist;
  u64 L_twist = 1;
  std::optional<PointScan> twist_scan;

  for (int tries = 0; tries < 40; ++tries) {
    auto P = scan.next();
    if (!P.has_value()) break;  // exhausted rational points (tiny field)
    auto ks = kill_multiples_in_interval(E, *P, lo, hi);
    if (ks.empty()) throw InternalError("no annihilating multiple in the Hasse interval");
    L = lcm_u64(L, exact_order_from_multiple(E, *P, ks.front()));
    auto cands = multiples_in_interval(L, lo, hi);
    if (cands.size() == 1) return cands.front();
    if (tries >= 8) {
      // quadratic-twist refinement: #E + #E_d = 2q + 2
      if (!twist.has_value()) {
        for (u64 key = 1; key < q; ++key) {
          FieldElem d = F.from_key(key);
          if (!d.is_zero() && !d.is_square()) {
            twist = quadratic_twist(E, d);
            twist_scan.emplace(*twist);
            break;
          }
        }
      }
      if (twist.has_value()) {
        auto TP = twist_scan->next();
        if (TP.has_value()) {
          auto tks = kill_multiples_in_interval(*twist, *TP, lo, hi);
          if (!tks.empty())
            L_twist = lcm_u64(L_twist, exact_order_from_multiple(*twist, *TP, tks.front()));
        }
        std::vector<u64> filtered;
        for (u64 N : cands)
          if ((2 * q + 2 - N) % L_twist == 0) filtered.push_back(N);
        if (filtered.size() == 1) return filtered.front();
      }
    }
  }
  if (q <= 10000000ull) return E.field().degree() == 1 ? brute_order_prime_field(E) : brute_order_generic(E);
  throw BudgetExceeded("group order ambiguous within BSGS budget for q=" + std::to_string(q));
}

}  // namespace

u64 group_order(const Curve& E, OrderMethod method) {
  u64 q = E.field().order();
  if (method == OrderMethod::Auto)
    method = q <= 200000 ? OrderMethod::BruteForce : OrderMethod::BabyStepGiantStep;
  if (method == OrderMethod::BruteForce) {
    if (q > 10000000ull)
      throw BudgetExceeded("brute-force point counting bounded by q <= 10^7");
    return E.field().degree() == 1 ? brute_order_prime_field(E) : brute_order_generic(E);
  }
  return bsgs_order(E);
}

// ---- torsion

std::vector<Point> n_torsion_points(const Curve& E, u64 n) {
  const Field& F = E.field();
  u64 q = F.order();
  std::vector<Point> pts;
  pts.push_back(Point::at_infinity());
  for (u64 xk = 0; xk < q; ++xk) {
    FieldElem x = F.from_key(xk);
    FieldElem t = E.rhs(x);
    if (t.is_zero()) {
      Point P = Point::affine(x, F.zero());
      if (E.mul((i64)n, P).infinity) pts.push_back(P);
    } else if (t.is_square()) {
      FieldElem y = t.sqrt();
      Point P = Point::affine(x, y);
      if (E.mul((i64)n, P).infinity) {
        pts.push_back(P);
        pts.push_back(E.negate(P));
      }
    }
  }
  std::sort(pts.begin(), pts.end(), point_less);
  return pts;
}

namespace {
bool has_exact_order(const Curve& E, const Point& P, u64 n,
                     const std::vector<std::pair<u64, int>>& n_factors) {
  if (!E.mul((i64)n, P).infinity) return false;
  for (auto [pr, e] : n_factors)
    if (E.mul((i64)(n / pr), P).infinity) return false;
  return true;
}
}  // namespace

TorsionBasis torsion_basis(const Curve& E, u64 n) {
  if (n == 0) throw PreconditionError("bad_degree", "torsion level must be >= 1");
  const Field& F = E.field();
  if (n % F.characteristic() == 0)
    throw PreconditionError("wild_input", "torsion level must be coprime to the characteristic");
  if (n == 1) return TorsionBasis{1, Point::at_infinity(), Point::at_infinity()};
  u64 q = F.order();
  // Full rational n-torsion forces mu_n into F_q via the Weil pairing.
  if ((q - 1) % n != 0) throw FullTorsionAbsent(q, n);
  u64 N = group_order(E);
  if (N % (n * n) != 0) throw FullTorsionAbsent(q, n);
  std::vector<Point> pts = n_torsion_points(E, n);
  if (pts.size() != n * n) throw FullTorsionAbsent(q, n);

  auto n_factors = factorize_u64(n);
  Point T;
  bool foundT = false;
  for (const Point& P : pts) {
    if (P.infinity) continue;
    if (has_exact_order(E, P, n, n_factors)) {
      T = P;
      foundT = true;
      break;
    }
  }
  if (!foundT) throw FullTorsionAbsent(q, n);
  for (const Point& P : pts) {
    if (P.infinity) continue;
    FieldElem z = weil_pairing(E, T, P, n);
    bool primitive = true;
    for (auto [pr, e] : n_factors)
      if (z.pow((i64)(n / pr)).is_one()) {
        primitive = false;
        break;
      }
    if (primitive) return TorsionBasis{n, T, P};
  }
  throw FullTorsionAbsent(q, n);
}

// ---- Weil pairing

namespace {

// Value at affine Z of the line through U and W (tangent if U = W); the line
// through O and an affine point is the vertical there.
std::optional<FieldElem> line_value(const Curve& E, const Point& U, const Point& W,
                                    const Point& Z) {
  const Field& F = E.field();
  if (U.infinity && W.infinity) return F.one();
  if (U.infinity) return Z.x - W.x;
  if (W.infinity) return Z.x - U.x;
  FieldElem lambda;
  if (U.x == W.x) {
    if (U.y == -W.y) return Z.x - U.x;  // vertical (includes y = 0 tangent)
    FieldElem three = F.from_int(3), two = F.from_int(2);
    lambda = (three * U.x * U.x + E.a4()) * (two * U.y).inv();
  } else {
    lambda = (W.y - U.y) * (W.x - U.x).inv();
  }
  return (Z.y - U.y) - lambda * (Z.x - U.x);
}

std::optional<FieldElem> vertical_value(const Point& U, const Point& Z, const Field& F) {
  if (U.infinity) return F.one();
  return Z.x - U.x;
}

// f_{n,A}(Z) where div(f_{n,A}) = n(A) - n(O), via Miller double-and-add.
// Returns nullopt when an intermediate line vanishes at Z (caller reshifts).
std::optional<FieldElem> miller_eval(const Curve& E, const Point& A, u64 n, const Point& Z) {
  const Field& F = E.field();
  if (A.infinity) return F.one();
  if (Z.infinity) return std::nullopt;
  FieldElem num = F.one(), den = F.one();
  Point V = A;
  int top = 63;
  while (top > 0 && ((n >> top) & 1) == 0) --top;
  for (int b = top - 1; b >= 0; --b) {
    Point V2 = E.add(V, V);
    auto l = line_value(E, V, V, Z);
    auto v = vertical_value(V2, Z, F);
    if (!l || !v || l->is_zero() || v->is_zero()) return std::nullopt;
    num = num * num * *l;
    den = den * den * *v;
    V = V2;
    if ((n >> b) & 1) {
      Point VA = E.add(V, A);
      auto l2 = line_value(E, V, A, Z);
      auto v2 = vertical_value(VA, Z, F);
      if (!l2 || !v2 || l2->is_zero() || v2->is_zero()) return std::nullopt;
      num = num * *l2;
      den = den * *v2;
      V = VA;
    }
  }
  return num * den.inv();
}

std::optional<FieldElem> pairing_with_shift(const Curve& E, const Point& P, const Point& Q,
                                            u64 n, const Point& S) {
  Point QS = E.add(Q, S);
  Point PmS = E.add(P, E.negate(S));
  Point mS = E.negate(S);
  auto a1 = miller_eval(E, P, n, QS);
  auto a2 = miller_eval(E, P, n, S);
  auto b1 = miller_eval(E, Q, n, PmS);
  auto b2 = miller_eval(E, Q, n, mS);
  if (!a1 || !a2 || !b1 || !b2) return std::nullopt;
  if (a1->is_zero() || a2->is_zero() || b1->is_zero() || b2->is_zero()) return std::nullopt;
  return (*a1 * a2->inv()) * (*b1 * b2->inv()).inv();
}

std::optional<FieldElem> weil_pairing_over(const Curve& E, const Point& P, const Point& Q,
                                           u64 n) {
  // deterministic shift schedule over rational points
  PointScan scan(E);
  Point bad1 = P, bad2 = E.negate(Q), bad3 = E.add(P, E.negate(Q));
  while (auto S = scan.next()) {
    if (point_eq(*S, bad1) || point_eq(*S, bad2) || point_eq(*S, bad3)) continue;
    auto e = pairing_with_shift(E, P, Q, n, *S);
    if (e.has_value()) {
      if (!e->pow((i64)n).is_one())
        throw InternalError("Weil pairing value is not an n-th root of unity");
      return *e;
    }
  }
  return std::nullopt;
}

}  // namespace

FieldElem weil_pairing(const Curve& E, const Point& P, const Point& Q, u64 n) {
  const Field& F = E.field();
  if (n == 0) throw PreconditionError("bad_degree", "pairing level must be >= 1");
  if (!E.on_curve(P) || !E.on_curve(Q))
    throw PreconditionError("off_curve", "pairing input not on the curve");
  if (!E.mul((i64)n, P).infinity || !E.mul((i64)n, Q).infinity)
    throw PreconditionError("not_torsion", "pairing inputs must be killed by n");
  if (P.infinity || Q.infinity) return F.one();
  auto e = weil_pairing_over(E, P, Q, n);
  if (e.has_value()) return *e;
  // Tiny curves can exhaust rational shifts (e.g. #E = 4, n = 2); retry over
  // the quadratic extension, where the value still lies in the base field.
  if (F.degree() == 1) {
    Field F2 = Field::make(F.characteristic(), 2);
    auto lift = [&](const FieldElem& a) { return F2.from_coeffs({a.coeffs()[0]}); };
    Curve E2 = Curve::make(F2, lift(E.a4()), lift(E.a6()));
    auto liftP = [&](const Point& A) {
      return A.infinity ? Point::at_infinity() : Point::affine(lift(A.x), lift(A.y));
    };
    auto e2 = weil_pairing_over(E2, liftP(P), liftP(Q), n);
    if (e2.has_value()) {
      if (e2->coeffs()[1] != 0)
        throw InternalError("Weil pairing of rational points left the base field");
      return F.from_int(e2->coeffs()[0]);
    }
  }
  throw InternalError("Weil pairing shift schedule exhausted");
}

// ---- level structures

LevelStructure level_structure(const Curve& E, u64 n) {
  const Field& F = E.field();
  if (n < 2) throw PreconditionError("bad_degree", "level must be >= 2");
  if ((F.order() - 1) % n != 0)
    throw FullTorsionAbsent(F.order(), n);
  TorsionBasis basis = torsion_basis(E, n);
  FieldElem zeta = F.unity_root(n);
  FieldElem z = weil_pairing(E, basis.T, basis.S, n);
  FieldElem acc = F.one();
  u64 c = 0;
  for (u64 k = 1; k < n; ++k) {
    acc = acc * zeta;
    if (acc == z) {
      c = k;
      break;
    }
  }
  if (c == 0) throw InternalError("basis pairing is not a primitive root power");
  if (gcd_u64(c, n) != 1) throw InternalError("level-structure constant not coprime to n");
  return LevelStructure{E, basis, zeta, c};
}

LevelStructure symplectify(const LevelStructure& ls) {
  if (ls.c == 1) return ls;
  u64 n = ls.basis.n;
  u64 cinv = invmod(ls.c, n);
  Point T2 = ls.E.mul((i64)cinv, ls.basis.T);
  FieldElem z = weil_pairing(ls.E, T2, ls.basis.S, n);
  if (z != ls.zeta) throw InternalError("symplectified basis pairing mismatch");
  return LevelStructure{ls.E, TorsionBasis{n, T2, ls.basis.S}, ls.zeta, 1};
}

Curve quadratic_twist(const Curve& E, const FieldElem& d) {
  if (d.is_zero() || d.is_square())
    throw PreconditionError("not_a_nonsquare", "quadratic twist needs a non-square d");
  FieldElem a4 = d * d * E.a4();
  FieldElem a6 = d * d * d * E.a6();
  return Curve::make(E.field(), a4, a6);
}

// ---- full level search

namespace {

unsigned resolve_threads(unsigned threads) {
  if (threads != 0) return std::min(threads, 64u);
  if (const char* env = std::getenv("G1B_THREADS")) {
    long v = std::strtol(env, nullptr, 10);
    if (v >= 1) return (unsigned)std::min<long>(v, 64);
  }
  return 1;
}

std::vector<FullLevelCurve> search_one_prime(u64 p, u64 n, u64 per_prime_limit) {
  std::vector<FullLevelCurve> out;
  Field F = Field::make(p, 1);
  u64 nn = n * n;
  std::vector<char> sq(p, 0);
  for (u64 y = 0; y <= p / 2; ++y) sq[mulmod(y, y, p)] = 1;
  for (u64 a4 = 0; a4 < p; ++a4) {
    for (u64 a6 = 0; a6 < p; ++a6) {
      u64 disc = addmod(mulmod(4, mulmod(a4, mulmod(a4, a4, p), p), p),
                        mulmod(27, mulmod(a6, a6, p), p), p);
      if (disc == 0) continue;
      // cheap order pre-filter before the torsion scan
      u64 count = 1;
      for (u64 x = 0; x < p; ++x) {
        u64 t = addmod(mulmod(addmod(mulmod(x, x, p), a4, p), x, p), a6, p);
        if (t == 0)
          count += 1;
        else if (sq[t])
          count += 2;
      }
      if (count % nn != 0) continue;
      Curve E = Curve::make(F, F.from_int(a4), F.from_int(a6));
      try {
        (void)torsion_basis(E, n);
      } catch (const FullTorsionAbsent&) {
        continue;
      }
      out.push_back(FullLevelCurve{p, a4, a6});
      if (per_prime_limit && out.size() >= per_prime_limit) return out;
    }
  }
  return out;
}

}  // namespace

std::vector<FullLevelCurve> full_level_search(u64 n, u64 p_min, u64 p_max, u64 per_prime_limit,
                                              unsigned threads) {
  if (n < 2) throw PreconditionError("bad_degree", "level must be >= 2");
  std::vector<u64> primes;
  for (u64 p = std::max<u64>(p_min, 5); p <= p_max; ++p) {
    if (!is_prime_u64(p)) continue;
    if (p % n != 1) continue;
    if ((6 * n) % p == 0) continue;
    primes.push_back(p);
  }
  unsigned T = resolve_threads(threads);
  std::vector<std::vector<FullLevelCurve>> per_prime(primes.size());
  if (T <= 1 || primes.size() <= 1) {
    for (size_t i = 0; i < primes.size(); ++i)
      per_prime[i] = search_one_prime(primes[i], n, per_prime_limit);
  } else {
    std::vector<std::future<void>> futs;
    std::atomic<size_t> next{0};
    for (unsigned t = 0; t < T; ++t) {
      futs.push_back(std::async(std::launch::async, [&]() {
        while (true) {
          size_t i = next.fetch_add(1);
          if (i >= primes.size()) return;
          per_prime[i] = search_one_prime(primes[i], n, per_prime_limit);
        }
      }));
    }
    for (auto& f : futs) f.get();
  }
  std::vector<FullLevelCurve> out;
  for (auto& v : per_prime) out.insert(out.end(), v.begin(), v.end());
  return out;
}

}  // namespace g1b
