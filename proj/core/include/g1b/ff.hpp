#pragma once
// Exact arithmetic in F_{p^r}, p an odd prime unless stated otherwise.
//
// Representation: F_{p^r} = F_p[x]/(f) where f is the lexicographically
// smallest monic irreducible of degree r ("lex" compares the coefficient
// tuple (c_{r-1}, ..., c_1, c_0), highest degree first; equivalently the
// integer encoding sum c_i p^i).  For r = 1 the modulus is x.  Elements are
// coefficient vectors (c_0, ..., c_{r-1}) with c_i in [0, p).
//
// Canonical element ordering: by the integer key sum c_i p^i.  "Smallest
// element" anywhere in this library means smallest key.  Field sizes are
// bounded by p^r < 2^62 so keys and coefficient products fit in 64/128 bits.
//
// Descriptors are immutable and shared; all value types here are safe to use
// concurrently from many threads once constructed.

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "g1b/arith.hpp"
#include "g1b/errors.hpp"

namespace g1b {

namespace detail {
struct FieldData;
}

class FieldElem;

class Field {
 public:
  Field() = default;  // invalid handle

  // Builds F_{p^r}.  Requires p prime (deterministic Miller-Rabin), r >= 1,
  // p^r < 2^62.  Throws PreconditionError otherwise.
  static Field make(u64 p, unsigned r);

  bool valid() const { return fd_ != nullptr; }
  u64 characteristic() const;
  unsigned degree() const;
  u64 order() const;  // p^r
  // Non-leading coefficients (c_0, ..., c_{r-1}) of the monic modulus.
  const std::vector<u64>& modulus() const;
  bool same(const Field& other) const;

  FieldElem zero() const;
  FieldElem one() const;
  // Embeds an integer via the constant coefficient (reduced mod p).
  FieldElem from_int(u64 v) const;
  // Element from coefficient vector (size <= r, entries reduced mod p).
  FieldElem from_coeffs(std::vector<u64> coeffs) const;
  // Inverse of FieldElem::key().
  FieldElem from_key(u64 key) const;

  // Canonical primitive n-th root of unity: the smallest element (canonical
  // ordering) of multiplicative order exactly n.  Requires n | p^r - 1.
  FieldElem unity_root(u64 n) const;
  // Smallest generator of the multiplicative group.
  FieldElem smallest_generator() const;

  // Factorization of p^r - 1 (cached).
  const std::vector<std::pair<u64, int>>& unit_group_factorization() const;

 private:
  friend class FieldElem;
  explicit Field(std::shared_ptr<const detail::FieldData> fd) : fd_(std::move(fd)) {}
  std::shared_ptr<const detail::FieldData> fd_;
};

class FieldElem {
 public:
  FieldElem() = default;  // invalid

  bool valid() const { return fd_ != nullptr; }
  Field field() const { return Field(fd_); }
  const std::vector<u64>& coeffs() const { return c_; }
  u64 key() const;  // sum c_i p^i, canonical ordering key
  bool is_zero() const;
  bool is_one() const;

  FieldElem operator+(const FieldElem& o) const;
  FieldElem operator-(const FieldElem& o) const;
  FieldElem operator*(const FieldElem& o) const;
  FieldElem operator-() const;
  bool operator==(const FieldElem& o) const;
  bool operator!=(const FieldElem& o) const { return !(*this == o); }
  // Deterministic total order (same field required): canonical key order.
  bool operator<(const FieldElem& o) const;

  FieldElem inv() const;          // requires nonzero
  FieldElem pow(i64 e) const;     // negative e allowed for nonzero base
  FieldElem frobenius(u64 steps = 1) const;  // x -> x^(p^steps)

  // Multiplicative order; requires nonzero.
  u64 mult_order() const;
  // Square root if one exists (odd q; generic Tonelli-Shanks with
  // deterministic non-residue scan).  Returns the smaller of the two roots in
  // canonical order; nullopt-like via bool + out param avoided: throws if
  // caller did not check is_square.
  bool is_square() const;
  FieldElem sqrt() const;

  // Serialized form "p^r:[c0,c1,...]".
  std::string to_string() const;

 private:
  friend class Field;
  FieldElem(std::shared_ptr<const detail::FieldData> fd, std::vector<u64> c)
      : fd_(std::move(fd)), c_(std::move(c)) {}
  void require_same_field(const FieldElem& o) const;
  std::shared_ptr<const detail::FieldData> fd_;
  std::vector<u64> c_;
};

}  // namespace g1b
