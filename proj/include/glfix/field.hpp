#pragma once

// Arithmetic in F_q = F_p[t]/(m(t)).
//
// Elements are stored as a raw index: the integer whose base-p digits are the
// coordinates in the basis {1, t, ..., t^{k-1}}, constant coordinate least
// significant. Index order is therefore the documented canonical element order,
// and indices 0..p-1 are exactly the prime subfield.

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "glfix/error.hpp"
#include "glfix/numutil.hpp"

namespace glfix {

using Elem = std::uint32_t;

inline constexpr std::uint64_t kMaxFieldOrder = 1u << 16;

namespace detail {

// Dense polynomials over the prime field Z/p, low degree first, no trailing zeros.
using ZpPoly = std::vector<std::uint32_t>;

inline void zp_trim(ZpPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

inline std::uint32_t zp_inv(std::uint32_t a, std::uint32_t p) {
  std::uint64_t result = 1, base = a % p;
  for (std::uint32_t e = p - 2; e > 0; e >>= 1) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
  }
  return static_cast<std::uint32_t>(result);
}

inline ZpPoly zp_rem(ZpPoly a, const ZpPoly& m, std::uint32_t p) {
  zp_trim(a);
  const std::size_t dm = m.size() - 1;
  const std::uint64_t lead_inv = zp_inv(m.back(), p);
  while (a.size() > dm) {
    const std::uint64_t factor = a.back() * lead_inv % p;
    const std::size_t shift = a.size() - 1 - dm;
    for (std::size_t i = 0; i <= dm; ++i)
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + (p - factor) * m[i]) % p);
    zp_trim(a);
  }
  return a;
}

inline ZpPoly zp_mulmod(const ZpPoly& a, const ZpPoly& b, const ZpPoly& m, std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  ZpPoly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      out[i + j] = static_cast<std::uint32_t>((out[i + j] + std::uint64_t(a[i]) * b[j]) % p);
  return zp_rem(std::move(out), m, p);
}

inline ZpPoly zp_powmod(ZpPoly base, std::uint64_t e, const ZpPoly& m, std::uint32_t p) {
  ZpPoly result = zp_rem({1}, m, p);
  base = zp_rem(std::move(base), m, p);
  for (; e > 0; e >>= 1) {
    if (e & 1) result = zp_mulmod(result, base, m, p);
    base = zp_mulmod(base, base, m, p);
  }
  return result;
}

inline ZpPoly zp_gcd(ZpPoly a, ZpPoly b, std::uint32_t p) {
  zp_trim(a);
  zp_trim(b);
  while (!b.empty()) {
    a = zp_rem(std::move(a), b, p);
    std::swap(a, b);
  }
  return a;
}

// Rabin's test over the prime field; m must have degree >= 1.
inline bool zp_irreducible(const ZpPoly& m, std::uint32_t p) {
  const std::size_t n = m.size() - 1;
  if (n == 1) return true;
  const ZpPoly x = {0, 1};
  std::vector<ZpPoly> frob(n + 1);
  frob[0] = zp_rem(x, m, p);
  for (std::size_t i = 1; i <= n; ++i) frob[i] = zp_powmod(frob[i - 1], p, m, p);
  if (frob[n] != frob[0]) return false;
  for (auto ell : prime_divisors(n)) {
    ZpPoly h = frob[n / ell];
    h.resize(std::max<std::size_t>(h.size(), 2), 0);
    h[1] = (h[1] + p - 1) % p;
    zp_trim(h);
    if (zp_gcd(h, m, p).size() != 1) return false;
  }
  return true;
}

struct FieldData {
  std::uint32_t p = 0;
  std::uint32_t k = 0;
  std::uint32_t q = 0;
  std::vector<std::uint32_t> modulus;  // k+1 coefficients, monic
  std::vector<Elem> exp;               // exp[i] = g^i for i in [0, 2(q-1))
  std::vector<std::uint32_t> log;      // log[exp[i]] = i, log[0] unused
  std::vector<std::uint16_t> add;      // q*q addition table when q is small
  std::vector<Elem> neg;
  std::vector<std::uint32_t> pow_p;    // p^i, i in [0, k]
  Elem t = 0;

  Elem add_digits(Elem a, Elem b) const {
    if (p == 2) return a ^ b;
    Elem out = 0;
    for (std::uint32_t i = 0; i < k; ++i) {
      out += ((a % p + b % p) % p) * pow_p[i];
      a /= p;
      b /= p;
    }
    return out;
  }
};

inline ZpPoly to_digits(Elem v, std::uint32_t p, std::uint32_t k) {
  ZpPoly d(k, 0);
  for (std::uint32_t i = 0; i < k; ++i) {
    d[i] = v % p;
    v /= p;
  }
  return d;
}

inline Elem from_digits(const ZpPoly& d, const FieldData& f) {
  Elem v = 0;
  for (std::size_t i = 0; i < d.size(); ++i) v += d[i] * f.pow_p[i];
  return v;
}

inline std::shared_ptr<const FieldData> build_field(std::uint32_t p, std::uint32_t k, ZpPoly modulus) {
  auto f = std::make_shared<FieldData>();
  f->p = p;
  f->k = k;
  f->modulus = std::move(modulus);
  f->pow_p.resize(k + 1);
  f->pow_p[0] = 1;
  for (std::uint32_t i = 1; i <= k; ++i) f->pow_p[i] = f->pow_p[i - 1] * p;
  f->q = f->pow_p[k];
  const std::uint32_t q = f->q;
  const std::uint32_t order = q - 1;

  auto slow_mul = [&](Elem a, Elem b) {
    return from_digits(zp_mulmod(to_digits(a, p, k), to_digits(b, p, k), f->modulus, p), *f);
  };
  auto slow_pow = [&](Elem a, std::uint64_t e) {
    return from_digits(zp_powmod(to_digits(a, p, k), e, f->modulus, p), *f);
  };

  // Primitive element: smallest index of multiplicative order q-1.
  const auto primes = prime_divisors(order == 0 ? 1 : order);
  Elem generator = 0;
  for (Elem g = 1; g < q && generator == 0; ++g) {
    if (slow_pow(g, order) != 1) continue;
    bool primitive = true;
    for (auto ell : primes)
      if (order > 1 && slow_pow(g, order / ell) == 1) primitive = false;
    if (primitive) generator = g;
  }
  if (generator == 0) throw Error(ErrorCode::ReducibleModulus, "no primitive element found");

  f->exp.resize(2 * std::size_t(order));
  f->log.assign(q, 0);
  Elem cur = 1;
  for (std::uint32_t i = 0; i < order; ++i) {
    f->exp[i] = cur;
    f->exp[i + order] = cur;
    f->log[cur] = i;
    cur = slow_mul(cur, generator);
  }

  f->neg.resize(q);
  for (Elem a = 0; a < q; ++a) {
    auto d = to_digits(a, p, k);
    for (auto& c : d) c = (p - c) % p;
    f->neg[a] = from_digits(d, *f);
  }
  if (q <= 256) {
    f->add.resize(std::size_t(q) * q);
    for (Elem a = 0; a < q; ++a)
      for (Elem b = 0; b < q; ++b) f->add[std::size_t(a) * q + b] = static_cast<std::uint16_t>(f->add_digits(a, b));
  }
  f->t = k >= 2 ? p : (p - f->modulus[0]) % p;
  return f;
}

}  // namespace detail

class FqElem;

// Description of F_q = F_{p^k}. Immutable and cheap to copy; copies share tables.
class FieldSpec {
 public:
  explicit FieldSpec(std::shared_ptr<const detail::FieldData> data) : data_(std::move(data)) {}

  std::uint32_t p() const noexcept { return data_->p; }
  std::uint32_t k() const noexcept { return data_->k; }
  std::uint32_t q() const noexcept { return data_->q; }
  const std::vector<std::uint32_t>& modulus() const noexcept { return data_->modulus; }

  friend bool operator==(const FieldSpec& a, const FieldSpec& b) noexcept {
    return a.data_ == b.data_ || (a.p() == b.p() && a.k() == b.k() && a.modulus() == b.modulus());
  }

  // Raw index arithmetic. Callers guarantee indices are < q.
  Elem add(Elem a, Elem b) const noexcept {
    const auto& f = *data_;
    return f.add.empty() ? f.add_digits(a, b) : f.add[std::size_t(a) * f.q + b];
  }
  Elem neg(Elem a) const noexcept { return data_->neg[a]; }
  Elem sub(Elem a, Elem b) const noexcept { return add(a, neg(b)); }
  Elem mul(Elem a, Elem b) const noexcept {
    if (a == 0 || b == 0) return 0;
    const auto& f = *data_;
    return f.exp[f.log[a] + f.log[b]];
  }
  Elem inv(Elem a) const {
    if (a == 0) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
    const auto& f = *data_;
    return f.exp[(f.q - 1 - f.log[a]) % (f.q - 1)];
  }
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, std::int64_t e) const {
    if (a == 0) {
      if (e < 0) throw Error(ErrorCode::DivisionByZero, "negative power of zero");
      return e == 0 ? 1 : 0;
    }
    const std::int64_t order = data_->q - 1;
    std::int64_t l = (std::int64_t(data_->log[a]) * (e % order)) % order;
    if (l < 0) l += order;
    return data_->exp[l];
  }
  // a^(p^i)
  Elem frob(Elem a, std::uint64_t i) const {
    if (a == 0) return 0;
    const std::uint64_t order = data_->q - 1;
    std::uint64_t l = data_->log[a];
    for (std::uint64_t j = 0; j < i % data_->k; ++j) l = l * data_->p % order;
    return data_->exp[l];
  }
  // Image of an integer in the prime subfield.
  Elem from_int(std::int64_t v) const noexcept {
    const std::int64_t p = data_->p;
    return static_cast<Elem>(((v % p) + p) % p);
  }
  // Multiplication by an integer (repeated addition).
  Elem times(std::int64_t n, Elem a) const noexcept { return mul(from_int(n), a); }
  Elem t_raw() const noexcept { return data_->t; }

  std::vector<std::uint32_t> coords(Elem a) const { return detail::to_digits(a, p(), k()); }

  FqElem element(Elem raw) const;
  FqElem zero() const;
  FqElem one() const;
  FqElem t() const;
  FqElem from_coords(std::span<const std::uint32_t> coords) const;

  std::string describe() const;

 private:
  std::shared_ptr<const detail::FieldData> data_;
};

class FqElem {
 public:
  FqElem(FieldSpec spec, Elem raw) : spec_(std::move(spec)), raw_(raw) {
    if (raw_ >= spec_.q()) throw Error(ErrorCode::InvalidArgument, "element index out of range");
  }

  const FieldSpec& spec() const noexcept { return spec_; }
  Elem raw() const noexcept { return raw_; }
  bool is_zero() const noexcept { return raw_ == 0; }
  std::vector<std::uint32_t> coords() const { return spec_.coords(raw_); }

  FqElem operator+(const FqElem& o) const { return {spec_, spec_.add(raw_, same(o))}; }
  FqElem operator-(const FqElem& o) const { return {spec_, spec_.sub(raw_, same(o))}; }
  FqElem operator*(const FqElem& o) const { return {spec_, spec_.mul(raw_, same(o))}; }
  FqElem operator/(const FqElem& o) const { return {spec_, spec_.div(raw_, same(o))}; }
  FqElem operator-() const { return {spec_, spec_.neg(raw_)}; }
  FqElem inv() const { return {spec_, spec_.inv(raw_)}; }
  FqElem pow(std::int64_t e) const { return {spec_, spec_.pow(raw_, e)}; }

  friend bool operator==(const FqElem& a, const FqElem& b) { return a.raw_ == a.same(b); }
  friend auto operator<=>(const FqElem& a, const FqElem& b) { return a.raw_ <=> a.same(b); }

 private:
  Elem same(const FqElem& o) const {
    if (!(spec_ == o.spec_)) throw Error(ErrorCode::FieldMismatch, "elements from different fields");
    return o.raw_;
  }

  FieldSpec spec_;
  Elem raw_;
};

inline FqElem FieldSpec::element(Elem raw) const { return {*this, raw}; }
inline FqElem FieldSpec::zero() const { return {*this, 0}; }
inline FqElem FieldSpec::one() const { return {*this, 1}; }
inline FqElem FieldSpec::t() const { return {*this, data_->t}; }
inline FqElem FieldSpec::from_coords(std::span<const std::uint32_t> coords) const {
  if (coords.size() > k()) throw Error(ErrorCode::InvalidArgument, "too many coordinates");
  Elem v = 0;
  for (std::size_t i = 0; i < coords.size(); ++i) v += (coords[i] % p()) * data_->pow_p[i];
  return {*this, v};
}

inline std::string FieldSpec::describe() const {
  std::string out = "F_" + std::to_string(q()) + " (p=" + std::to_string(p()) + ", k=" + std::to_string(k()) + ")";
  return out;
}

// Builds F_{p^k}. Without an explicit modulus, picks the monic irreducible of
// degree k whose coefficient tuple (a_0..a_{k-1}) is smallest as a base-p
// integer with a_{k-1} most significant.
inline FieldSpec make_field(std::uint32_t p, std::uint32_t k,
                            std::optional<std::vector<std::uint32_t>> modulus = std::nullopt) {
  if (!is_prime(p)) throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
  if (k == 0) throw Error(ErrorCode::DegreeMismatch, "extension degree must be >= 1");
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < k; ++i) {
    q *= p;
    if (q > kMaxFieldOrder) throw Error(ErrorCode::FieldTooLarge, "field order exceeds 2^16");
  }
  if (modulus) {
    detail::ZpPoly m = *modulus;
    for (auto& c : m) c %= p;
    detail::zp_trim(m);
    if (m.size() != k + 1) throw Error(ErrorCode::DegreeMismatch, "modulus degree differs from k");
    if (m.back() != 1) throw Error(ErrorCode::NotMonic, "modulus must be monic");
    if (!detail::zp_irreducible(m, p)) throw Error(ErrorCode::ReducibleModulus, "modulus is reducible over F_p");
    return FieldSpec(detail::build_field(p, k, std::move(m)));
  }
  for (std::uint64_t v = 0; v < q; ++v) {
    detail::ZpPoly m(k + 1, 0);
    std::uint64_t rest = v;
    for (std::uint32_t i = 0; i < k; ++i) {
      m[i] = static_cast<std::uint32_t>(rest % p);
      rest /= p;
    }
    m[k] = 1;
    if (detail::zp_irreducible(m, p)) return FieldSpec(detail::build_field(p, k, std::move(m)));
  }
  throw Error(ErrorCode::ReducibleModulus, "no irreducible modulus found");
}

inline std::uint32_t trace_to_prime(const FieldSpec& f, Elem a) {
  Elem sum = 0;
  for (std::uint32_t i = 0; i < f.k(); ++i) sum = f.add(sum, f.frob(a, i));
  return sum;  // lies in the prime subfield, so the index is the residue
}

inline std::uint32_t trace_to_prime(const FqElem& a) { return trace_to_prime(a.spec(), a.raw()); }

inline FqElem frobenius(const FqElem& a, std::uint64_t i) { return a.spec().element(a.spec().frob(a.raw(), i)); }

// Multiplicative order, descending through the prime factors of q-1.
inline std::uint64_t element_order(const FieldSpec& f, Elem a) {
  if (a == 0) throw Error(ErrorCode::ZeroElement, "order of zero");
  std::uint64_t order = f.q() - 1;
  for (auto ell : prime_divisors(order == 0 ? 1 : order))
    while (order % ell == 0 && f.pow(a, static_cast<std::int64_t>(order / ell)) == 1) order /= ell;
  return order;
}

inline std::uint64_t element_order(const FqElem& a) { return element_order(a.spec(), a.raw()); }

}  // namespace glfix
