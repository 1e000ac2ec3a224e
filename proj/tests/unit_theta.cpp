#include <doctest.h>

#include <random>
#include <set>

#include "g1b/errors.hpp"
#include "g1b/theta.hpp"
#include "oracles.hpp"

using namespace g1b;

namespace {

Matrix frob_entrywise(const Matrix& M, u64 steps) {
  Matrix out = M;
  for (auto& row : out)
    for (auto& e : row) e = e.frobenius(steps);
  return out;
}

// cocycles on a cyclic shadow of order m are generated from an admissible
// value (x, y) on the generator
std::vector<CocyclePair> make_cocycle(u64 n, u64 m, u64 q, u64 x, u64 y) {
  std::vector<CocyclePair> xi(m);
  xi[0] = {0, 0};
  u64 qi = 1 % n;
  for (u64 i = 0; i + 1 < m; ++i) {
    xi[i + 1] = {(xi[i].first + x) % n, (xi[i].second + qi * y % n) % n};
    qi = qi * (q % n) % n;
  }
  return xi;
}

std::vector<std::pair<u64, u64>> admissible_values(u64 n, u64 m, u64 q) {
  u64 norm_b = 0, qi = 1 % n;
  for (u64 i = 0; i < m; ++i) {
    norm_b = (norm_b + qi) % n;
    qi = qi * (q % n) % n;
  }
  std::vector<std::pair<u64, u64>> out;
  for (u64 x = 0; x < n; ++x)
    for (u64 y = 0; y < n; ++y)
      if (x * (m % n) % n == 0 && y * norm_b % n == 0) out.emplace_back(x, y);
  return out;
}

}  // namespace

TEST_CASE("heisenberg matrices for n = 2 over F_7") {
  Field F = Field::make(7, 1);
  HeisenbergRep rep = heisenberg(F, 2);
  CHECK(rep.zeta == F.from_int(6));  // -1
  REQUIRE(rep.Mt.size() == 2);
  CHECK(rep.Mt[0][0].is_zero());
  CHECK(rep.Mt[0][1].is_one());
  CHECK(rep.Mt[1][0].is_one());
  CHECK(rep.Mt[1][1].is_zero());
  CHECK(rep.Ms[0][0].is_one());
  CHECK(rep.Ms[1][1] == F.from_int(6));
  CHECK(rep.Ms[0][1].is_zero());
  // commutator: Mt Ms = zeta * Ms Mt
  Matrix lhs = mat_mul(rep.Mt, rep.Ms);
  Matrix rhs = mat_mul(rep.Ms, rep.Mt);
  for (auto& row : rhs)
    for (auto& e : row) e = e * rep.zeta;
  CHECK(mat_eq(lhs, rhs));
}

TEST_CASE("commutator relation for general parameters") {
  Field F = Field::make(7, 1);
  for (u64 n : {2ull, 3ull, 6ull}) {
    for (u64 c = 1; c < n; ++c) {
      if (gcd_u64(c, n) != 1) continue;
      for (u64 s : {1ull, 3ull}) {
        HeisenbergRep rep = heisenberg(F, n, c, F.from_int(s));
        Matrix lhs = mat_mul(rep.Mt, rep.Ms);
        Matrix rhs = mat_mul(rep.Ms, rep.Mt);
        FieldElem com = rep.zeta.pow((i64)c);
        for (auto& row : rhs)
          for (auto& e : row) e = e * com;
        CHECK(mat_eq(lhs, rhs));
      }
    }
  }
  CHECK_THROWS_AS(heisenberg(Field::make(7, 1), 4), PreconditionError);  // 4 does not divide 6
  CHECK_THROWS_AS(heisenberg(F, 3, 1, F.zero()), PreconditionError);
  CHECK_THROWS_AS(heisenberg(F, 6, 2, F.one()), PreconditionError);  // gcd(c, n) > 1
}

TEST_CASE("the n^3 standard lifts are distinct (Heisenberg group order)") {
  Field F = Field::make(7, 1);
  HeisenbergRep rep = heisenberg(F, 3);
  std::set<std::vector<u64>> seen;
  for (u64 k = 0; k < 3; ++k)
    for (u64 a = 0; a < 3; ++a)
      for (u64 b = 0; b < 3; ++b) {
        Matrix M = heisenberg_lift(rep, a, b);
        FieldElem z = rep.zeta.pow((i64)k);
        std::vector<u64> key;
        for (auto& row : M)
          for (auto& e : row) key.push_back((e * z).key());
        CHECK(seen.insert(key).second);
      }
  CHECK(seen.size() == 27);
}

TEST_CASE("shadow validation") {
  Field F = Field::make(7, 1);
  HeisenbergRep rep = heisenberg(F, 3);
  std::vector<CocyclePair> xi(2, {0, 0});
  CHECK_THROWS_AS(cocycle_eval(rep, GaloisShadow{2, 10}, xi, 0, 1), PreconditionError);  // q not a power of p
  CHECK_THROWS_AS(cocycle_eval(rep, GaloisShadow{2, 0}, xi, 0, 1), PreconditionError);
  // q^m must be 1 mod n: q = 7^1 works for any m since 7 = 1 mod 3
  Field F25 = Field::make(5, 2);
  HeisenbergRep rep25 = heisenberg(F25, 3);
  // degree must divide k*m: q = 5, m = 3 fails over F_{5^2}
  std::vector<CocyclePair> xi3(3, {0, 0});
  CHECK_THROWS_AS(cocycle_eval(rep25, GaloisShadow{3, 5}, xi3, 0, 1), PreconditionError);
  // non-cocycle rejected
  std::vector<CocyclePair> bad(2);
  bad[0] = {0, 0};
  bad[1] = {1, 0};  // would need 2*1 = 0 mod 3
  CHECK_THROWS_AS(cocycle_eval(rep, GaloisShadow{2, 7}, bad, 0, 1), PreconditionError);
}

TEST_CASE("cocycle scalars match a dense-matrix recomputation") {
  std::mt19937_64 rng(31);
  for (auto [p, n] : std::vector<std::pair<u64, u64>>{{7, 3}, {5, 4}, {11, 5}, {3, 2}}) {
    Field F = Field::make(p, 1);
    for (u64 m : {1ull, 2ull, 3ull, 4ull, 6ull}) {
      std::vector<std::pair<u64, u64>> adm = admissible_values(n, m, p);
      for (int t = 0; t < 8; ++t) {
        u64 c = 1 + rng() % (n - 1);
        if (gcd_u64(c, n) != 1) c = 1;
        FieldElem scale = F.from_int(1 + rng() % (p - 1));
        HeisenbergRep rep = heisenberg(F, n, c, scale);
        auto [x, y] = adm[rng() % adm.size()];
        std::vector<CocyclePair> xi = make_cocycle(n, m, p, x, y);
        GaloisShadow shadow{m, p};
        for (u64 s = 0; s < m; ++s)
          for (u64 u = 0; u < m; ++u) {
            FieldElem got = cocycle_eval(rep, shadow, xi, s, u);
            // dense route: lift, twist, invert by Gaussian elimination
            Matrix A = heisenberg_lift(rep, xi[s].first, xi[s].second);
            Matrix B = frob_entrywise(heisenberg_lift(rep, xi[u].first, xi[u].second), s);
            u64 st = (s + u) % m;
            Matrix Cinv = testo::gauss_inverse(F, heisenberg_lift(rep, xi[st].first, xi[st].second));
            Matrix prod = mat_mul(mat_mul(A, B), Cinv);
            for (size_t i = 0; i < prod.size(); ++i)
              for (size_t j = 0; j < prod.size(); ++j)
                CHECK(prod[i][j] == (i == j ? got : F.zero()));
          }
      }
    }
  }
}

TEST_CASE("cocycle scalar is trivial for unit lift scale and trivial action") {
  // with lift_scale = 1, Ms^n = Id and the correction D = 1, so the scalar is
  // exactly zeta^{-c a_tau b_sigma}
  Field F = Field::make(7, 1);
  u64 n = 3, m = 3;
  HeisenbergRep rep = heisenberg(F, n);
  GaloisShadow shadow{m, 7};
  for (auto [x, y] : admissible_values(n, m, 7)) {
    std::vector<CocyclePair> xi = make_cocycle(n, m, 7, x, y);
    for (u64 s = 0; s < m; ++s)
      for (u64 t = 0; t < m; ++t) {
        FieldElem got = cocycle_eval(rep, shadow, xi, s, t);
        i64 expo = -(i64)(xi[t].first * xi[s].second % n);
        CHECK(got == rep.zeta.pow(expo));
      }
  }
}

TEST_CASE("coboundary witness over the extension field") {
  Field F = Field::make(7, 1);
  for (u64 n : {2ull, 3ull}) {
    HeisenbergRep rep = heisenberg(F, n, 1, F.from_int(3));
    for (u64 m : {1ull, 2ull, 3ull, 6ull}) {
      GaloisShadow shadow{m, 7};
      for (auto [x, y] : admissible_values(n, m, 7)) {
        std::vector<CocyclePair> xi = make_cocycle(n, m, 7, x, y);
        auto table = cocycle_table(rep, shadow, xi);
        CoboundWitness w = cobound_cocycle(rep, shadow, table);
        CHECK(w.E.order() == powmod(7, m, ~0ull >> 1));
        REQUIRE(w.lambda.size() == m);
        // independent re-check of the coboundary identity in E
        auto embed = [&](const FieldElem& e) { return w.E.from_coeffs({e.coeffs()[0]}); };
        for (u64 s = 0; s < m; ++s)
          for (u64 t = 0; t < m; ++t) {
            FieldElem lhs = embed(table[s][t]);
            FieldElem rhs =
                w.lambda[s] * w.lambda[t].frobenius(s) * w.lambda[(s + t) % m].inv();
            CHECK(lhs == rhs);
          }
      }
    }
  }
  // F = E case: q = 5 acts nontrivially on F_25 and the cochain lives there
  Field F25 = Field::make(5, 2);
  HeisenbergRep rep25 = heisenberg(F25, 3, 1, F25.from_key(7));
  GaloisShadow sh{2, 5};
  std::vector<CocyclePair> xi25 = make_cocycle(3, 2, 5, 0, 1);
  auto table25 = cocycle_table(rep25, sh, xi25);
  CHECK(cobound_cocycle(rep25, sh, table25).E.same(F25));
  // beyond both supported shapes: base F_{5^2} with cochain home F_{5^4}
  GaloisShadow sh4{4, 5};
  std::vector<CocyclePair> xi4 = make_cocycle(3, 4, 5, 0, 1);
  auto table4 = cocycle_table(rep25, sh4, xi4);
  CHECK_THROWS_AS(cobound_cocycle(rep25, sh4, table4), BudgetExceeded);
}

TEST_CASE("block matrix model of the degree shift") {
  for (u64 p : {7ull, 13ull}) {
    Field F = Field::make(p, 1);
    for (u64 n = 1; n <= 3; ++n)
      for (u64 m = 1; m <= 3; ++m) {
        if (n * m > 6) continue;
        for (u64 b = 1; b < p; b += 3) {
          MatrixModelReport rep = degree_shift_matrix_check(F, n, m, F.from_int(b));
          CHECK(rep.ok);
          CHECK(rep.detail.empty());
        }
      }
  }
}
