#include <doctest.h>

#include <algorithm>
#include <random>

#include "g1b/errors.hpp"
#include "g1b/valuation.hpp"
#include "oracles.hpp"

using namespace g1b;

TEST_CASE("canonical form: span equality and generator-order independence") {
  std::mt19937_64 rng(37);
  for (u64 m : {4ull, 9ull, 12ull}) {
    for (int t = 0; t < 40; ++t) {
      u64 rank = 3;
      size_t k = 1 + rng() % 3;
      std::vector<Vec> gens;
      for (size_t i = 0; i < k; ++i) {
        Vec g(rank);
        for (auto& x : g) x = rng() % m;
        gens.push_back(g);
      }
      Subgroup H = Subgroup::make(m, rank, gens);
      auto closure = testo::additive_closure(m, rank, gens);
      CHECK(H.order() == closure.size());
      std::vector<Vec> elems = H.elements();
      CHECK(elems.size() == closure.size());
      for (const Vec& e : elems) CHECK(closure.count(e) == 1);
      for (const Vec& e : closure) CHECK(H.contains(e));
      // rebuilding from the element list or shuffled generators is identical
      CHECK(Subgroup::make(m, rank, elems) == H);
      std::vector<Vec> shuffled = gens;
      std::shuffle(shuffled.begin(), shuffled.end(), rng);
      shuffled.push_back(gens[0]);  // redundant generator
      CHECK(Subgroup::make(m, rank, shuffled) == H);
    }
  }
}

TEST_CASE("subgroup basics") {
  Subgroup Z = Subgroup::zero(6, 2);
  CHECK(Z.order() == 1);
  CHECK(Z.contains({0, 0}));
  CHECK_FALSE(Z.contains({3, 0}));
  Subgroup F = Subgroup::full(6, 2);
  CHECK(F.order() == 36);
  CHECK(Z.subset_of(F));
  CHECK_FALSE(F.subset_of(Z));
  Subgroup H = Subgroup::make(6, 2, {{2, 0}});
  CHECK(H.order() == 3);
  CHECK(H.contains({4, 0}));
  CHECK_FALSE(H.contains({1, 0}));
  CHECK(H.subset_of(F));
  CHECK(H == Subgroup::make(6, 2, {{4, 0}}));
  CHECK(H != F);
  CHECK_THROWS_AS(Subgroup::make(1, 2, {}), PreconditionError);
  CHECK_THROWS_AS(Subgroup::make(4, 0, {}), PreconditionError);
  CHECK_THROWS_AS(Subgroup::make(4, 2, {{1, 2, 3}}), PreconditionError);
}

TEST_CASE("symplectic module: alternating and nondegenerate for all small n") {
  for (u64 n = 2; n <= 9; ++n) {
    SymplecticModule M = SymplecticModule::make(n);
    CHECK(M.alternating());
    CHECK(M.nondegenerate());
    CHECK(M.pair({1, 0, 0, 0}, {0, 1, 0, 0}) == 1);
    CHECK(M.pair({0, 1, 0, 0}, {1, 0, 0, 0}) == n - 1);
    CHECK(M.pair({0, 0, 1, 0}, {0, 0, 0, 1}) == 1);
    CHECK(M.pair({1, 0, 0, 0}, {0, 0, 1, 0}) == 0);
    CHECK(M.pair({1, 1, 1, 1}, {1, 1, 1, 1}) == 0);
  }
}

TEST_CASE("orthogonal complements: |H| * |Hperp| = n^4") {
  SymplecticModule M2 = SymplecticModule::make(2);
  // every subgroup of (Z/2)^4: spans of all <= 4 element subsets
  std::vector<Vec> all;
  for (u64 code = 0; code < 16; ++code)
    all.push_back({code & 1, (code >> 1) & 1, (code >> 2) & 1, (code >> 3) & 1});
  std::set<std::vector<Vec>> seen;
  for (u64 a = 0; a < 16; ++a)
    for (u64 b = a; b < 16; ++b)
      for (u64 c = b; c < 16; ++c)
        for (u64 d = c; d < 16; ++d) {
          Subgroup H = Subgroup::make(2, 4, {all[a], all[b], all[c], all[d]});
          if (!seen.insert(H.basis()).second) continue;
          Subgroup P = orth_complement(M2, H);
          CHECK(H.order() * P.order() == 16);
          // double complement recovers H
          CHECK(orth_complement(M2, P) == H);
          for (const Vec& h : H.elements())
            for (const Vec& w : P.elements()) CHECK(M2.pair(h, w) == 0);
        }
  CHECK(seen.size() == 67);  // the subgroup count of (Z/2)^4

  // the documented example: <e0> has complement {v : v_1 = 0} of order 8
  Subgroup H = Subgroup::make(2, 4, {{1, 0, 0, 0}});
  Subgroup P = orth_complement(M2, H);
  CHECK(P.order() == 8);
  for (const Vec& v : P.elements()) CHECK(v[1] == 0);

  // random sample over Z/3
  SymplecticModule M3 = SymplecticModule::make(3);
  std::mt19937_64 rng(41);
  for (int t = 0; t < 60; ++t) {
    std::vector<Vec> gens;
    for (int i = 0; i < 2; ++i)
      gens.push_back({rng() % 3, rng() % 3, rng() % 3, rng() % 3});
    Subgroup H3 = Subgroup::make(3, 4, gens);
    Subgroup P3 = orth_complement(M3, H3);
    CHECK(H3.order() * P3.order() == 81);
    CHECK(orth_complement(M3, P3) == H3);
  }
}

TEST_CASE("splitting criterion") {
  SymplecticModule M = SymplecticModule::make(2);
  // a cyclic candidate: intersection with the 2-torsion is 1-dimensional, its
  // complement is bigger, so the criterion fails
  Subgroup C = Subgroup::make(4, 4, {{1, 0, 0, 0}});
  CHECK_FALSE(splitting_check(M, C));
  // the full ambient group intersects V in all of V; orth(V) = 0 is inside
  Subgroup full = Subgroup::full(4, 4);
  CHECK(splitting_check(M, full));
  CHECK_THROWS_AS(splitting_check(M, Subgroup::full(2, 4)), PreconditionError);
}

TEST_CASE("noncyclic certificate for n = 2 and n = 3") {
  NoncyclicReport r2 = noncyclic_certificate(2);
  CHECK(r2.exhaustive_ran);
  CHECK(r2.cyclic_subgroups_scanned == 136);
  CHECK(r2.cyclic_subgroups_scanned == testo::cyclic_subgroup_count(4));
  CHECK(r2.splitting_found == 0);
  CHECK(r2.max_intersection_order == 2);
  CHECK(r2.min_complement_order == 8);
  CHECK(r2.counting_branch_noncyclic);
  CHECK(r2.branches_agree);

  NoncyclicReport r3 = noncyclic_certificate(3);
  CHECK(r3.cyclic_subgroups_scanned == 1121);
  CHECK(r3.cyclic_subgroups_scanned == testo::cyclic_subgroup_count(9));
  CHECK(r3.splitting_found == 0);
  CHECK(r3.max_intersection_order == 3);
  CHECK(r3.min_complement_order == 27);
  CHECK(r3.branches_agree);

  // counting-only mode for large n; the exhaustive branch refuses
  NoncyclicReport big = noncyclic_certificate(23, false);
  CHECK_FALSE(big.exhaustive_ran);
  CHECK(big.counting_branch_noncyclic);
  CHECK(big.branches_agree);
  CHECK_THROWS_AS(noncyclic_certificate(7, true), BudgetExceeded);
  CHECK_THROWS_AS(noncyclic_certificate(1), PreconditionError);
}

TEST_CASE("certificate is stable across runs") {
  NoncyclicReport a = noncyclic_certificate(2);
  NoncyclicReport b = noncyclic_certificate(2);
  CHECK(a.cyclic_subgroups_scanned == b.cyclic_subgroups_scanned);
  CHECK(a.splitting_found == b.splitting_found);
  CHECK(a.max_intersection_order == b.max_intersection_order);
  CHECK(a.min_complement_order == b.min_complement_order);
}
