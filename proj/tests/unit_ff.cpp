#include <doctest.h>

#include <random>
#include <set>

#include "g1b/errors.hpp"
#include "g1b/ff.hpp"
#include "oracles.hpp"

using namespace g1b;

TEST_CASE("construction and modulus selection") {
  Field F7 = Field::make(7, 1);
  CHECK(F7.characteristic() == 7);
  CHECK(F7.degree() == 1);
  CHECK(F7.order() == 7);
  CHECK(F7.modulus() == std::vector<u64>{0});  // modulus x for prime fields

  // lex-smallest irreducible x^2 + 1 over F_3 (key 1 beats every other)
  Field F9 = Field::make(3, 2);
  CHECK(F9.order() == 9);
  CHECK(F9.modulus() == std::vector<u64>{1, 0});

  // x^2 + 2 over F_5 (2 is the smallest non-residue)
  Field F25 = Field::make(5, 2);
  CHECK(F25.modulus() == std::vector<u64>{2, 0});

  CHECK_THROWS_AS(Field::make(6, 1), PreconditionError);
  CHECK_THROWS_AS(Field::make(0, 1), PreconditionError);
  CHECK_THROWS_AS(Field::make(7, 0), PreconditionError);
  CHECK_THROWS_AS(Field::make(3, 41), PreconditionError);  // 3^41 >= 2^62
}

TEST_CASE("modulus is irreducible (brute root / factor check, r <= 3)") {
  for (auto [p, r] : std::vector<std::pair<u64, unsigned>>{{3, 2}, {3, 3}, {5, 2}, {7, 2}, {7, 3}, {11, 2}}) {
    Field F = Field::make(p, r);
    std::vector<u64> m = F.modulus();  // non-leading coeffs of monic degree-r
    // no root in F_p rules out any linear factor; for r <= 3 that already
    // certifies irreducibility
    for (u64 x = 0; x < p; ++x) {
      u64 val = 1;  // leading coefficient times x^r, built by Horner
      for (unsigned i = r; i-- > 0;) val = (mulmod(val, x, p) + m[i]) % p;
      CHECK(val != 0);
    }
  }
}

TEST_CASE("schoolbook multiplication oracle") {
  std::mt19937_64 rng(3);
  for (auto [p, r] : std::vector<std::pair<u64, unsigned>>{{3, 3}, {5, 2}, {7, 2}, {13, 2}}) {
    Field F = Field::make(p, r);
    for (int t = 0; t < 400; ++t) {
      FieldElem a = F.from_key(rng() % F.order());
      FieldElem b = F.from_key(rng() % F.order());
      CHECK((a * b).coeffs() == testo::schoolbook_mul(F, a.coeffs(), b.coeffs()));
    }
  }
}

TEST_CASE("ring axioms and inverses, exhaustive over F_9 and F_25") {
  for (auto [p, r] : std::vector<std::pair<u64, unsigned>>{{3, 2}, {5, 2}}) {
    Field F = Field::make(p, r);
    u64 q = F.order();
    for (u64 i = 0; i < q; ++i) {
      FieldElem a = F.from_key(i);
      CHECK((a + F.zero()) == a);
      CHECK((a * F.one()) == a);
      CHECK((a - a).is_zero());
      CHECK((a + (-a)).is_zero());
      if (!a.is_zero()) {
        CHECK((a * a.inv()).is_one());
        CHECK(a.pow(-1) == a.inv());
        CHECK(a.pow((i64)q - 1).is_one());
      }
      for (u64 j = 0; j < q; ++j) {
        FieldElem b = F.from_key(j);
        CHECK((a + b) == (b + a));
        CHECK((a * b) == (b * a));
      }
    }
  }
}

TEST_CASE("key round trip, ordering, serialization format") {
  Field F = Field::make(7, 1);
  CHECK(F.from_int(3).to_string() == "7^1:[3]");
  Field F9 = Field::make(3, 2);
  CHECK(F9.from_coeffs({1, 2}).to_string() == "3^2:[1,2]");
  for (u64 k = 0; k < 9; ++k) CHECK(F9.from_key(k).key() == k);
  CHECK(F9.from_key(3) < F9.from_key(5));
  CHECK_FALSE(F9.from_key(5) < F9.from_key(5));
  CHECK_THROWS_AS(F9.from_key(9), PreconditionError);
  CHECK(F.from_int(10) == F.from_int(3));  // reduction mod p
}

TEST_CASE("frobenius") {
  Field F = Field::make(5, 2);
  for (u64 k = 0; k < 25; ++k) {
    FieldElem a = F.from_key(k);
    CHECK(a.frobenius() == a.pow(5));
    CHECK(a.frobenius(2) == a);  // order r
  }
  // fixes exactly the prime subfield
  u64 fixed = 0;
  for (u64 k = 0; k < 25; ++k)
    if (F.from_key(k).frobenius() == F.from_key(k)) ++fixed;
  CHECK(fixed == 5);
}

TEST_CASE("multiplicative order, generator, unity roots") {
  Field F7 = Field::make(7, 1);
  CHECK(F7.smallest_generator() == F7.from_int(3));
  CHECK(F7.unity_root(3) == F7.from_int(2));  // 2 and 4 have order 3; 2 is smaller
  CHECK(F7.unity_root(6) == F7.from_int(3));
  CHECK(F7.unity_root(2) == F7.from_int(6));
  CHECK(F7.unity_root(1) == F7.one());
  CHECK_THROWS_AS(F7.unity_root(4), PreconditionError);  // 4 does not divide 6

  Field F13 = Field::make(13, 1);
  u64 sum = 0;
  for (u64 k = 1; k < 13; ++k) sum += (F13.from_key(k).mult_order() == 12) ? 1 : 0;
  CHECK(sum == 4);  // phi(12) generators
  CHECK(F13.smallest_generator().mult_order() == 12);

  Field F25 = Field::make(5, 2);
  FieldElem z3 = F25.unity_root(3);
  CHECK(z3.mult_order() == 3);
  for (u64 k = 0; k < z3.key(); ++k) {
    FieldElem e = F25.from_key(k);
    CHECK((e.is_zero() || e.mult_order() != 3));  // smallest of order 3
  }
}

TEST_CASE("squares and square roots, exhaustive over F_49") {
  Field F = Field::make(7, 2);
  for (u64 k = 0; k < 49; ++k) {
    FieldElem a = F.from_key(k);
    bool has_root = false;
    for (u64 j = 0; j < 49 && !has_root; ++j) has_root = (F.from_key(j) * F.from_key(j)) == a;
    CHECK(a.is_square() == has_root);
    if (has_root) {
      FieldElem r = a.sqrt();
      CHECK(r * r == a);
      CHECK_FALSE(-r < r);  // smaller of the two roots in canonical order
    }
  }
  for (u64 k = 0; k < 49; ++k) {
    FieldElem a = F.from_key(k);
    if (!a.is_square()) {
      CHECK_THROWS_AS(a.sqrt(), PreconditionError);
      break;
    }
  }
}

TEST_CASE("unit group factorization matches the direct factorization") {
  Field F = Field::make(11, 2);
  CHECK(F.unit_group_factorization() == factorize_u64(120));
}
