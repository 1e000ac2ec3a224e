#include "g1b/ff.hpp"

#include <algorithm>

namespace g1b {
namespace detail {

struct FieldData {
  u64 p = 0;
  unsigned r = 0;
  u64 q = 0;                     // p^r
  std::vector<u64> mod_coeffs;   // c_0..c_{r-1}, modulus = x^r + sum c_i x^i
  std::vector<std::pair<u64, int>> unit_factorization;  // of q - 1
};

namespace {

// --- dense polynomial helpers over F_p (coefficient vectors, low degree first)

void poly_trim(std::vector<u64>& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// c = a*b mod (x^r + sum m_i x^i), all coefficients mod p
std::vector<u64> poly_mulmod(const std::vector<u64>& a, const std::vector<u64>& b,
                             const std::vector<u64>& m, unsigned r, u64 p) {
  std::vector<u64> buf(2 * r - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) {
      if (b[j] == 0) continue;
      buf[i + j] = addmod(buf[i + j], mulmod(a[i], b[j], p), p);
    }
  }
  for (size_t k = buf.size(); k-- > r;) {
    u64 d = buf[k];
    if (d == 0) continue;
    buf[k] = 0;
    for (unsigned i = 0; i < r; ++i) {
      if (m[i] == 0) continue;
      // x^k = x^{k-r} * x^r = -sum m_i x^{k-r+i}
      buf[k - r + i] = addmod(buf[k - r + i], mulmod(d, p - m[i], p), p);
    }
  }
  buf.resize(r);
  return buf;
}

std::vector<u64> poly_powmod(std::vector<u64> base, u64 e, const std::vector<u64>& m,
                             unsigned r, u64 p) {
  std::vector<u64> acc(r, 0);
  acc[0] = 1;
  base.resize(r, 0);
  while (e) {
    if (e & 1) acc = poly_mulmod(acc, base, m, r, p);
    base = poly_mulmod(base, base, m, r, p);
    e >>= 1;
  }
  return acc;
}

// gcd of arbitrary polynomials over F_p (not mod anything)
std::vector<u64> poly_gcd(std::vector<u64> a, std::vector<u64> b, u64 p) {
  poly_trim(a);
  poly_trim(b);
  while (!b.empty()) {
    // a mod b
    u64 lead_inv = invmod(b.back(), p);
    while (a.size() >= b.size()) {
      u64 f = mulmod(a.back(), lead_inv, p);
      size_t shift = a.size() - b.size();
      for (size_t i = 0; i < b.size(); ++i)
        a[shift + i] = submod(a[shift + i], mulmod(f, b[i], p), p);
      poly_trim(a);
      if (a.empty()) break;
    }
    std::swap(a, b);
  }
  return a;
}

bool is_irreducible(const std::vector<u64>& m, unsigned r, u64 p) {
  // Rabin test: x^{p^r} == x mod f, and gcd(x^{p^{r/s}} - x, f) = 1 for each
  // prime s | r.
  std::vector<u64> x(r, 0);
  if (r == 1) return true;
  x[1] = 1;
  auto frob_iter = [&](unsigned k) {
    // x^{p^k} mod f
    std::vector<u64> t = x;
    for (unsigned i = 0; i < k; ++i) t = poly_powmod(t, p, m, r, p);
    return t;
  };
  if (frob_iter(r) != x) return false;
  unsigned rr = r;
  std::vector<unsigned> primes;
  for (unsigned s = 2; s * s <= rr; ++s)
    while (rr % s == 0) {
      if (primes.empty() || primes.back() != s) primes.push_back(s);
      rr /= s;
    }
  if (rr > 1) primes.push_back(rr);
  for (unsigned s : primes) {
    std::vector<u64> t = frob_iter(r / s);
    // t - x
    std::vector<u64> d = t;
    d.resize(std::max<size_t>(d.size(), 2), 0);
    d[1] = submod(d[1], 1, p);
    std::vector<u64> full_mod = m;
    full_mod.push_back(1);  // monic modulus as an honest polynomial
    auto g = poly_gcd(d, full_mod, p);
    if (g.size() > 1) return false;
  }
  return true;
}

}  // namespace
}  // namespace detail

using detail::FieldData;

Field Field::make(u64 p, unsigned r) {
  if (!is_prime_u64(p))
    throw PreconditionError("not_prime", "field characteristic must be prime: " + std::to_string(p));
  if (r < 1) throw PreconditionError("bad_degree", "field degree must be >= 1");
  u64 q = 0;
  if (!checked_pow_u64(p, r, u64(1) << 62, &q))
    throw PreconditionError("field_too_large", "p^r must be < 2^62");
  auto fd = std::make_shared<FieldData>();
  fd->p = p;
  fd->r = r;
  fd->q = q;
  if (r == 1) {
    fd->mod_coeffs = {0};  // modulus x
  } else {
    // smallest monic irreducible in lex order on (c_{r-1}, ..., c_0)
    std::vector<u64> c(r, 0);
    bool found = false;
    for (u64 M = 0; M < q; ++M) {
      u64 t = M;
      for (unsigned i = 0; i < r; ++i) {
        c[i] = t % p;
        t /= p;
      }
      if (detail::is_irreducible(c, r, p)) {
        found = true;
        break;
      }
    }
    if (!found) throw InternalError("no irreducible polynomial found");  // impossible
    fd->mod_coeffs = c;
  }
  fd->unit_factorization = factorize_u64(q - 1);
  return Field(std::move(fd));
}

u64 Field::characteristic() const { return fd_->p; }
unsigned Field::degree() const { return fd_->r; }
u64 Field::order() const { return fd_->q; }
const std::vector<u64>& Field::modulus() const { return fd_->mod_coeffs; }
bool Field::same(const Field& other) const {
  return fd_ && other.fd_ && fd_->p == other.fd_->p && fd_->r == other.fd_->r;
}
const std::vector<std::pair<u64, int>>& Field::unit_group_factorization() const {
  return fd_->unit_factorization;
}

FieldElem Field::zero() const { return FieldElem(fd_, std::vector<u64>(fd_->r, 0)); }
FieldElem Field::one() const {
  std::vector<u64> c(fd_->r, 0);
  c[0] = 1;
  return FieldElem(fd_, std::move(c));
}
FieldElem Field::from_int(u64 v) const {
  std::vector<u64> c(fd_->r, 0);
  c[0] = v % fd_->p;
  return FieldElem(fd_, std::move(c));
}
FieldElem Field::from_coeffs(std::vector<u64> coeffs) const {
  if (coeffs.size() > fd_->r)
    throw PreconditionError("bad_coeffs", "coefficient vector longer than field degree");
  coeffs.resize(fd_->r, 0);
  for (auto& x : coeffs) x %= fd_->p;
  return FieldElem(fd_, std::move(coeffs));
}
FieldElem Field::from_key(u64 key) const {
  if (key >= fd_->q) throw PreconditionError("bad_key", "element key out of range");
  std::vector<u64> c(fd_->r, 0);
  for (unsigned i = 0; i < fd_->r; ++i) {
    c[i] = key % fd_->p;
    key /= fd_->p;
  }
  return FieldElem(fd_, std::move(c));
}

FieldElem Field::unity_root(u64 n) const {
  u64 q = fd_->q;
  if (n == 0 || (q - 1) % n != 0)
    throw PreconditionError("no_unity_root",
                            "n must divide p^r - 1 (n=" + std::to_string(n) + ", q=" + std::to_string(q) + ")");
  if (n == 1) return one();
  // Find one element of exact order n, then minimize over the generators of
  // the (unique) cyclic subgroup of order n.
  FieldElem h;
  for (u64 key = 2; key < q; ++key) {
    FieldElem x = from_key(key);
    FieldElem cand = x.pow((i64)((q - 1) / n));
    if (cand.is_zero() || cand.is_one()) continue;
    if (cand.mult_order() == n) {
      h = cand;
      break;
    }
  }
  if (!h.valid()) throw InternalError("unity root search failed");  // impossible for n | q-1
  FieldElem best = h;
  FieldElem cur = h;
  for (u64 k = 2; k <= n; ++k) {
    cur = cur * h;
    if (k == n) break;
    if (gcd_u64(k, n) == 1 && cur < best) best = cur;
  }
  return best;
}

FieldElem Field::smallest_generator() const {
  u64 q = fd_->q;
  if (q == 2) return one();
  for (u64 key = 2; key < q; ++key) {
    FieldElem x = from_key(key);
    if (x.mult_order() == q - 1) return x;
  }
  throw InternalError("no generator found");  // impossible
}

// ---- FieldElem

void FieldElem::require_same_field(const FieldElem& o) const {
  if (!fd_ || !o.fd_ || fd_->p != o.fd_->p || fd_->r != o.fd_->r)
    throw Error("field mismatch in element operation");
}

u64 FieldElem::key() const {
  u64 k = 0;
  for (size_t i = c_.size(); i-- > 0;) k = k * fd_->p + c_[i];
  return k;
}

bool FieldElem::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](u64 x) { return x == 0; });
}
bool FieldElem::is_one() const {
  if (c_[0] != 1) return false;
  for (size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

FieldElem FieldElem::operator+(const FieldElem& o) const {
  require_same_field(o);
  std::vector<u64> c(c_.size());
  for (size_t i = 0; i < c_.size(); ++i) c[i] = addmod(c_[i], o.c_[i], fd_->p);
  return FieldElem(fd_, std::move(c));
}
FieldElem FieldElem::operator-(const FieldElem& o) const {
  require_same_field(o);
  std::vector<u64> c(c_.size());
  for (size_t i = 0; i < c_.size(); ++i) c[i] = submod(c_[i], o.c_[i], fd_->p);
  return FieldElem(fd_, std::move(c));
}
FieldElem FieldElem::operator-() const {
  std::vector<u64> c(c_.size());
  for (size_t i = 0; i < c_.size(); ++i) c[i] = c_[i] == 0 ? 0 : fd_->p - c_[i];
  return FieldElem(fd_, std::move(c));
}
FieldElem FieldElem::operator*(const FieldElem& o) const {
  require_same_field(o);
  return FieldElem(fd_, detail::poly_mulmod(c_, o.c_, fd_->mod_coeffs, fd_->r, fd_->p));
}
bool FieldElem::operator==(const FieldElem& o) const {
  require_same_field(o);
  return c_ == o.c_;
}
bool FieldElem::operator<(const FieldElem& o) const {
  require_same_field(o);
  for (size_t i = c_.size(); i-- > 0;)
    if (c_[i] != o.c_[i]) return c_[i] < o.c_[i];
  return false;
}

FieldElem FieldElem::inv() const {
  if (is_zero()) throw PreconditionError("division_by_zero", "inverse of zero field element");
  u64 p = fd_->p;
  if (fd_->r == 1) {
    std::vector<u64> c{invmod(c_[0], p)};
    return FieldElem(fd_, std::move(c));
  }
  // extended Euclid on (elem, modulus) over F_p[x]
  std::vector<u64> a = c_;
  detail::poly_trim(a);
  std::vector<u64> b = fd_->mod_coeffs;
  b.push_back(1);
  std::vector<u64> s0{1}, s1{};  // coefficients tracking a-side
  // invariant: s0*orig_a = a (mod modulus), s1*orig_a = b (mod modulus)
  while (!b.empty()) {
    // divide a by b: a = q*b + rem
    std::vector<u64> q_poly;
    u64 lead_inv = invmod(b.back(), p);
    std::vector<u64> rem = a;
    q_poly.assign(rem.size() >= b.size() ? rem.size() - b.size() + 1 : 0, 0);
    while (rem.size() >= b.size() && !rem.empty()) {
      u64 f = mulmod(rem.back(), lead_inv, p);
      size_t shift = rem.size() - b.size();
      q_poly[shift] = f;
      for (size_t i = 0; i < b.size(); ++i)
        rem[shift + i] = submod(rem[shift + i], mulmod(f, b[i], p), p);
      detail::poly_trim(rem);
    }
    // s_new = s0 - q*s1
    std::vector<u64> s_new = s0;
    s_new.resize(std::max(s_new.size(), q_poly.size() + (s1.empty() ? 0 : s1.size() - 1) + 1), 0);
    for (size_t i = 0; i < q_poly.size(); ++i) {
      if (q_poly[i] == 0) continue;
      for (size_t j = 0; j < s1.size(); ++j)
        s_new[i + j] = submod(s_new[i + j], mulmod(q_poly[i], s1[j], p), p);
    }
    detail::poly_trim(s_new);
    a = b;
    b = rem;
    s0 = s1;
    s1 = s_new;
  }
  // now a = gcd (degree 0 since modulus irreducible and elem nonzero), s0*orig = a
  if (a.size() != 1) throw InternalError("inverse: gcd not constant");
  u64 scale = invmod(a[0], p);
  for (auto& x : s0) x = mulmod(x, scale, p);
  s0.resize(fd_->r, 0);
  return FieldElem(fd_, std::move(s0));
}

FieldElem FieldElem::pow(i64 e) const {
  if (is_zero()) {
    if (e > 0) return *this;
    if (e == 0) return field().one();
    throw PreconditionError("division_by_zero", "negative power of zero");
  }
  u64 m = fd_->q - 1;
  u64 ee = (u64)(((i128)e % (i128)m + (i128)m) % (i128)m);
  FieldElem acc = field().one();
  FieldElem base = *this;
  while (ee) {
    if (ee & 1) acc = acc * base;
    base = base * base;
    ee >>= 1;
  }
  return acc;
}

FieldElem FieldElem::frobenius(u64 steps) const {
  FieldElem x = *this;
  steps %= fd_->r;  // Frobenius has order r on F_{p^r}
  for (u64 i = 0; i < steps; ++i) x = x.pow((i64)fd_->p);
  return x;
}

u64 FieldElem::mult_order() const {
  if (is_zero()) throw PreconditionError("division_by_zero", "order of zero element");
  u64 ord = fd_->q - 1;
  for (auto [pr, e] : fd_->unit_factorization) {
    for (int i = 0; i < e; ++i) {
      if (pow((i64)(ord / pr)).is_one())
        ord /= pr;
      else
        break;
    }
  }
  return ord;
}

bool FieldElem::is_square() const {
  if (is_zero()) return true;
  if (fd_->p == 2) return true;  // squaring is bijective in char 2
  return pow((i64)((fd_->q - 1) / 2)).is_one();
}

FieldElem FieldElem::sqrt() const {
  if (is_zero()) return *this;
  if (!is_square()) throw PreconditionError("not_a_square", "sqrt of a non-square");
  Field F = field();
  u64 q = fd_->q;
  // Tonelli-Shanks in the cyclic group F_q^*
  u64 t = q - 1;
  unsigned s = 0;
  while ((t & 1) == 0) {
    t >>= 1;
    ++s;
  }
  FieldElem root;
  if (s == 1) {
    root = pow((i64)((q + 1) / 4));
  } else {
    FieldElem z;
    for (u64 key = 2; key < q; ++key) {
      FieldElem cand = F.from_key(key);
      if (!cand.is_zero() && !cand.is_square()) {
        z = cand;
        break;
      }
    }
    FieldElem M_c = z.pow((i64)t);
    FieldElem u = pow((i64)t);
    FieldElem x = pow((i64)((t + 1) / 2));
    unsigned m = s;
    while (!u.is_one()) {
      FieldElem tmp = u;
      unsigned i = 0;
      while (!tmp.is_one()) {
        tmp = tmp * tmp;
        ++i;
      }
      FieldElem b = M_c;
      for (unsigned j = 0; j + i + 1 < m; ++j) b = b * b;
      M_c = b * b;
      u = u * M_c;
      x = x * b;
      m = i;
    }
    root = x;
  }
  FieldElem other = -root;
  return other < root ? other : root;
}

std::string FieldElem::to_string() const {
  std::string s = std::to_string(fd_->p) + "^" + std::to_string(fd_->r) + ":[";
  for (size_t i = 0; i < c_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(c_[i]);
  }
  s += "]";
  return s;
}

}  // namespace g1b
