#pragma once

// The action A o f = (cx+d)^n f((ax+b)/(cx+d)) of GL_2(F_q) on polynomials.
//
// Note the composition order: A o (B o f) = (BA) o f. The substitution
// x -> (ax+b)/(cx+d) composes contravariantly, so this is a right action.

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "glfix/error.hpp"
#include "glfix/field.hpp"
#include "glfix/irreducible.hpp"
#include "glfix/poly.hpp"

namespace glfix {

// Invertible 2x2 matrix [[a, b], [c, d]] over F_q.
class Mat2 {
 public:
  Mat2(const FqElem& a, const FqElem& b, const FqElem& c, const FqElem& d) : field_(a.spec()) {
    for (const auto* e : {&b, &c, &d})
      if (!(e->spec() == field_)) throw Error(ErrorCode::FieldMismatch, "matrix entries from different fields");
    e_ = {a.raw(), b.raw(), c.raw(), d.raw()};
    if (det_raw() == 0) throw Error(ErrorCode::Singular, "matrix is singular");
  }

  Mat2(const FieldSpec& field, std::array<Elem, 4> entries) : field_(field), e_(entries) {
    for (auto x : e_)
      if (x >= field_.q()) throw Error(ErrorCode::InvalidArgument, "entry index out of range");
    if (det_raw() == 0) throw Error(ErrorCode::Singular, "matrix is singular");
  }

  static Mat2 identity(const FieldSpec& f) { return Mat2(f, {1, 0, 0, 1}); }
  // x -> x + s
  static Mat2 translation(const FieldSpec& f, Elem s) { return Mat2(f, {1, s, 0, 1}); }
  // x -> a x
  static Mat2 homothety(const FieldSpec& f, Elem a) { return Mat2(f, {a, 0, 0, 1}); }

  const FieldSpec& field() const noexcept { return field_; }
  const std::array<Elem, 4>& entries() const noexcept { return e_; }
  FqElem a() const { return field_.element(e_[0]); }
  FqElem b() const { return field_.element(e_[1]); }
  FqElem c() const { return field_.element(e_[2]); }
  FqElem d() const { return field_.element(e_[3]); }

  Elem det_raw() const noexcept { return field_.sub(field_.mul(e_[0], e_[3]), field_.mul(e_[1], e_[2])); }
  FqElem det() const { return field_.element(det_raw()); }

  Mat2 operator*(const Mat2& o) const {
    check_same(o);
    const auto& F = field_;
    const auto& x = e_;
    const auto& y = o.e_;
    return Mat2(F, {F.add(F.mul(x[0], y[0]), F.mul(x[1], y[2])), F.add(F.mul(x[0], y[1]), F.mul(x[1], y[3])),
                    F.add(F.mul(x[2], y[0]), F.mul(x[3], y[2])), F.add(F.mul(x[2], y[1]), F.mul(x[3], y[3]))});
  }

  Mat2 inverse() const {
    const auto& F = field_;
    const Elem di = F.inv(det_raw());
    return Mat2(F, {F.mul(e_[3], di), F.mul(F.neg(e_[1]), di), F.mul(F.neg(e_[2]), di), F.mul(e_[0], di)});
  }

  Mat2 scaled(Elem lambda) const {
    const auto& F = field_;
    return Mat2(F, {F.mul(e_[0], lambda), F.mul(e_[1], lambda), F.mul(e_[2], lambda), F.mul(e_[3], lambda)});
  }

  // Packs the entries into one integer; distinct matrices over one field get distinct keys.
  std::uint64_t key() const noexcept {
    const std::uint64_t q = field_.q();
    return ((e_[0] * q + e_[1]) * q + e_[2]) * q + e_[3];
  }

  bool is_identity() const noexcept { return e_ == std::array<Elem, 4>{1, 0, 0, 1}; }
  bool is_upper_unitriangular() const noexcept { return e_[0] == 1 && e_[2] == 0 && e_[3] == 1; }

  friend bool operator==(const Mat2& x, const Mat2& y) { return x.field_ == y.field_ && x.e_ == y.e_; }

  void check_same(const Mat2& o) const {
    if (!(field_ == o.field_)) throw Error(ErrorCode::FieldMismatch, "matrices over different fields");
  }

 private:
  FieldSpec field_;
  std::array<Elem, 4> e_;
};

// sum_i f_i (ax+b)^i (cx+d)^{n-i}
inline Poly act(const Mat2& A, const Poly& f) {
  if (!(A.field() == f.field())) throw Error(ErrorCode::FieldMismatch, "matrix and polynomial over different fields");
  if (f.is_zero() || f.deg() == 0) throw Error(ErrorCode::ConstantPolynomial, "action needs deg f >= 1");
  const auto& F = f.field();
  const std::size_t n = f.deg();
  const auto& e = A.entries();
  const Poly num(F, std::vector<Elem>{e[1], e[0]});
  const Poly den(F, std::vector<Elem>{e[3], e[2]});
  std::vector<Poly> num_pow{Poly::constant(F, 1)}, den_pow{Poly::constant(F, 1)};
  for (std::size_t i = 1; i <= n; ++i) {
    num_pow.push_back(num_pow.back() * num);
    den_pow.push_back(den_pow.back() * den);
  }
  Poly out(F);
  for (std::size_t i = 0; i <= n; ++i) {
    const Elem fi = f.coeff_raw(i);
    if (fi != 0) out = out + (num_pow[i] * den_pow[n - i]).scaled(fi);
  }
  return out;
}

enum class FixMode { Strict, Projective };

namespace detail {

inline bool fixed_unchecked(const Mat2& A, const Poly& f, FixMode mode) {
  const Poly g = act(A, f);
  if (mode == FixMode::Strict) return g == f;
  return !g.is_zero() && normalize_monic(g) == f;
}

inline void require_fixable(const Poly& f) {
  if (f.is_zero() || f.deg() == 0) throw Error(ErrorCode::ConstantPolynomial, "need a nonconstant polynomial");
  if (!f.is_monic()) throw Error(ErrorCode::NotMonic, "fixed-point queries need a monic polynomial");
  if (f.deg() < 2) throw Error(ErrorCode::InvalidArgument, "fixed-point queries need deg f >= 2");
  if (!is_irreducible(f)) throw Error(ErrorCode::ReducibleInput, "fixed-point queries need an irreducible polynomial");
}

}  // namespace detail

// Strict: A o f = f. Projective: A o f = lambda f for some lambda != 0.
inline bool is_fixed(const Mat2& A, const Poly& f, FixMode mode) {
  detail::require_fixable(f);
  return detail::fixed_unchecked(A, f, mode);
}

inline bool fixed_by_set(const Poly& f, std::span<const Mat2> mats, FixMode mode) {
  detail::require_fixable(f);
  for (const auto& A : mats)
    if (!detail::fixed_unchecked(A, f, mode)) return false;
  return true;
}

// One matrix per class of GL_2 modulo scalars: the first nonzero entry in
// reading order (a, b, c, d) is 1. Ordered by entry indices lexicographically.
inline std::vector<Mat2> pgl_representatives(const FieldSpec& F) {
  std::vector<Mat2> out;
  const Elem q = F.q();
  for (Elem a = 0; a < q; ++a)
    for (Elem b = 0; b < q; ++b)
      for (Elem c = 0; c < q; ++c)
        for (Elem d = 0; d < q; ++d) {
          const Elem first = a != 0 ? a : b != 0 ? b : c != 0 ? c : d;
          if (first != 1) continue;
          if (F.sub(F.mul(a, d), F.mul(b, c)) == 0) continue;
          out.emplace_back(F, std::array<Elem, 4>{a, b, c, d});
        }
  return out;
}

// Monic irreducibles of degree 2..max_degree fixed by every element of PGL_2(F_q).
inline std::vector<Poly> pgl_fixed_scan(const FieldSpec& F, std::size_t max_degree, FixMode mode = FixMode::Projective,
                                        std::uint64_t cap = kDefaultCap) {
  for (std::size_t n = 2; n <= max_degree; ++n) check_cap(F, n, cap);
  const auto reps = pgl_representatives(F);
  std::vector<Poly> out;
  for (std::size_t n = 2; n <= max_degree; ++n) {
    for_each_irreducible(
        F, n,
        [&](const Poly& f) {
          for (const auto& A : reps)
            if (!detail::fixed_unchecked(A, f, mode)) return;
          out.push_back(f);
        },
        cap);
  }
  return out;
}

}  // namespace glfix
