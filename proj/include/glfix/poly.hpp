#pragma once

// Dense univariate polynomials over F_q.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "glfix/error.hpp"
#include "glfix/field.hpp"

namespace glfix {

class Poly {
 public:
  explicit Poly(FieldSpec field) : field_(std::move(field)) {}

  // coeffs[i] is the coefficient of x^i; trailing zeros are dropped.
  Poly(FieldSpec field, std::vector<Elem> coeffs) : field_(std::move(field)), c_(std::move(coeffs)) {
    for (auto c : c_)
      if (c >= field_.q()) throw Error(ErrorCode::InvalidArgument, "coefficient index out of range");
    trim();
  }

  Poly(FieldSpec field, std::span<const FqElem> coeffs) : field_(std::move(field)) {
    c_.reserve(coeffs.size());
    for (const auto& c : coeffs) {
      if (!(c.spec() == field_)) throw Error(ErrorCode::FieldMismatch, "coefficient from another field");
      c_.push_back(c.raw());
    }
    trim();
  }

  static Poly constant(const FieldSpec& f, Elem c) { return Poly(f, std::vector<Elem>{c}); }
  static Poly monomial(const FieldSpec& f, Elem c, std::size_t e) {
    std::vector<Elem> v(e + 1, 0);
    v[e] = c;
    return Poly(f, std::move(v));
  }
  static Poly x(const FieldSpec& f) { return monomial(f, 1, 1); }
  // x + b
  static Poly linear(const FieldSpec& f, Elem b) { return Poly(f, std::vector<Elem>{b, 1}); }

  const FieldSpec& field() const noexcept { return field_; }
  std::span<const Elem> raw() const noexcept { return c_; }
  bool is_zero() const noexcept { return c_.empty(); }

  // Empty for the zero polynomial.
  std::optional<std::size_t> degree() const noexcept {
    if (c_.empty()) return std::nullopt;
    return c_.size() - 1;
  }
  std::size_t deg() const {
    if (c_.empty()) throw Error(ErrorCode::ZeroPolynomial, "degree of the zero polynomial");
    return c_.size() - 1;
  }

  Elem coeff_raw(std::size_t i) const noexcept { return i < c_.size() ? c_[i] : 0; }
  FqElem coeff(std::size_t i) const { return field_.element(coeff_raw(i)); }
  Elem lead_raw() const noexcept { return c_.empty() ? 0 : c_.back(); }
  FqElem leading() const { return field_.element(lead_raw()); }
  bool is_monic() const noexcept { return !c_.empty() && c_.back() == 1; }

  Poly operator+(const Poly& o) const {
    check_same(o);
    std::vector<Elem> out(std::max(c_.size(), o.c_.size()), 0);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = field_.add(coeff_raw(i), o.coeff_raw(i));
    return Poly(field_, std::move(out));
  }
  Poly operator-(const Poly& o) const {
    check_same(o);
    std::vector<Elem> out(std::max(c_.size(), o.c_.size()), 0);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = field_.sub(coeff_raw(i), o.coeff_raw(i));
    return Poly(field_, std::move(out));
  }
  Poly operator-() const {
    std::vector<Elem> out(c_);
    for (auto& c : out) c = field_.neg(c);
    return Poly(field_, std::move(out));
  }
  Poly operator*(const Poly& o) const {
    check_same(o);
    if (is_zero() || o.is_zero()) return Poly(field_);
    std::vector<Elem> out(c_.size() + o.c_.size() - 1, 0);
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (c_[i] == 0) continue;
      for (std::size_t j = 0; j < o.c_.size(); ++j)
        out[i + j] = field_.add(out[i + j], field_.mul(c_[i], o.c_[j]));
    }
    return Poly(field_, std::move(out));
  }
  Poly scaled(Elem s) const {
    std::vector<Elem> out(c_);
    for (auto& c : out) c = field_.mul(c, s);
    return Poly(field_, std::move(out));
  }
  Poly scaled(const FqElem& s) const {
    if (!(s.spec() == field_)) throw Error(ErrorCode::FieldMismatch, "scalar from another field");
    return scaled(s.raw());
  }

  friend bool operator==(const Poly& a, const Poly& b) { return a.field_ == b.field_ && a.c_ == b.c_; }

  void check_same(const Poly& o) const {
    if (!(field_ == o.field_)) throw Error(ErrorCode::FieldMismatch, "polynomials over different fields");
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  FieldSpec field_;
  std::vector<Elem> c_;
};

// Canonical order: coefficient tuples compared as base-q integers, leading
// coefficient most significant. The zero polynomial sorts first.
inline std::strong_ordering canonical_compare(const Poly& a, const Poly& b) {
  const auto ra = a.raw(), rb = b.raw();
  if (ra.size() != rb.size()) return ra.size() <=> rb.size();
  for (std::size_t i = ra.size(); i-- > 0;)
    if (ra[i] != rb[i]) return ra[i] <=> rb[i];
  return std::strong_ordering::equal;
}

inline bool canonical_less(const Poly& a, const Poly& b) { return canonical_compare(a, b) < 0; }

inline void sort_canonical(std::vector<Poly>& polys) { std::sort(polys.begin(), polys.end(), canonical_less); }

// f = Q g + R with deg R < deg g.
inline std::pair<Poly, Poly> divrem(const Poly& f, const Poly& g) {
  f.check_same(g);
  if (g.is_zero()) throw Error(ErrorCode::DivisionByZero, "polynomial division by zero");
  const auto& F = f.field();
  std::vector<Elem> r(f.raw().begin(), f.raw().end());
  const auto gr = g.raw();
  const std::size_t dg = gr.size() - 1;
  if (r.size() <= dg) return {Poly(F), f};
  std::vector<Elem> quot(r.size() - dg, 0);
  const Elem lead_inv = F.inv(gr.back());
  for (std::size_t top = r.size(); top-- > dg;) {
    const Elem c = r[top];
    if (c == 0) continue;
    const Elem factor = F.mul(c, lead_inv);
    const std::size_t shift = top - dg;
    quot[shift] = factor;
    for (std::size_t i = 0; i <= dg; ++i) r[shift + i] = F.sub(r[shift + i], F.mul(factor, gr[i]));
  }
  r.resize(dg);
  return {Poly(F, std::move(quot)), Poly(F, std::move(r))};
}

inline Poly rem(const Poly& f, const Poly& g) { return divrem(f, g).second; }

inline Poly normalize_monic(const Poly& f) {
  if (f.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "cannot normalize the zero polynomial");
  return f.scaled(f.field().inv(f.lead_raw()));
}

// Monic gcd; gcd(0, 0) = 0.
inline Poly gcd(Poly a, Poly b) {
  a.check_same(b);
  while (!b.is_zero()) {
    Poly r = rem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a.is_zero() ? a : normalize_monic(a);
}

inline Elem eval_raw(const Poly& f, Elem a) {
  const auto& F = f.field();
  Elem acc = 0;
  const auto c = f.raw();
  for (std::size_t i = c.size(); i-- > 0;) acc = F.add(F.mul(acc, a), c[i]);
  return acc;
}

inline FqElem eval(const Poly& f, const FqElem& a) {
  if (!(a.spec() == f.field())) throw Error(ErrorCode::FieldMismatch, "evaluation point from another field");
  return f.field().element(eval_raw(f, a.raw()));
}

// f(g(x)) by Horner's rule.
inline Poly compose(const Poly& f, const Poly& g) {
  f.check_same(g);
  const auto& F = f.field();
  Poly acc(F);
  const auto c = f.raw();
  for (std::size_t i = c.size(); i-- > 0;) acc = acc * g + Poly::constant(F, c[i]);
  return acc;
}

// f(x + b)
inline Poly translate(const Poly& f, const FqElem& b) {
  if (!(b.spec() == f.field())) throw Error(ErrorCode::FieldMismatch, "shift from another field");
  return compose(f, Poly::linear(f.field(), b.raw()));
}

// a^n f(a^{-1} x), n = deg f.
inline Poly scale_transform(const Poly& f, const FqElem& a) {
  if (!(a.spec() == f.field())) throw Error(ErrorCode::FieldMismatch, "scalar from another field");
  if (a.is_zero()) throw Error(ErrorCode::ZeroScalar, "scale_transform needs a nonzero scalar");
  const std::size_t n = f.deg();
  const auto& F = f.field();
  std::vector<Elem> out(n + 1);
  for (std::size_t i = 0; i <= n; ++i) out[i] = F.mul(f.coeff_raw(i), F.pow(a.raw(), static_cast<std::int64_t>(n - i)));
  return Poly(F, std::move(out));
}

inline Poly mulmod(const Poly& a, const Poly& b, const Poly& m) { return rem(a * b, m); }

inline Poly powmod(Poly base, std::uint64_t e, const Poly& m) {
  Poly result = rem(Poly::constant(m.field(), 1), m);
  base = rem(base, m);
  for (; e > 0; e >>= 1) {
    if (e & 1) result = mulmod(result, base, m);
    if (e > 1) base = mulmod(base, base, m);
  }
  return result;
}

inline Poly pow(const Poly& base, std::uint64_t e) {
  Poly result = Poly::constant(base.field(), 1);
  Poly b = base;
  for (; e > 0; e >>= 1) {
    if (e & 1) result = result * b;
    if (e > 1) b = b * b;
  }
  return result;
}

}  // namespace glfix
