#pragma once

// p-subgroups of GL_2(F_q) and their fixed irreducible polynomials.

#include <algorithm>
#include <cstdint>
#include <array>
#include <deque>
#include <optional>
#include <span>
#include <unordered_set>
#include <vector>

#include "glfix/action.hpp"
#include "glfix/error.hpp"
#include "glfix/field.hpp"
#include "glfix/invariant.hpp"

namespace glfix {

namespace detail {

// (E - I)^2 == 0
inline bool is_unipotent(const Mat2& E) {
  const auto& F = E.field();
  const auto& e = E.entries();
  const Elem m00 = F.sub(e[0], 1), m01 = e[1], m10 = e[2], m11 = F.sub(e[3], 1);
  return F.add(F.mul(m00, m00), F.mul(m01, m10)) == 0 && F.add(F.mul(m00, m01), F.mul(m01, m11)) == 0 &&
         F.add(F.mul(m10, m00), F.mul(m11, m10)) == 0 && F.add(F.mul(m10, m01), F.mul(m11, m11)) == 0;
}

}  // namespace detail

class PSubgroup {
 public:
  // Breadth-first closure of the generators. Fails unless the order is p^r, r >= 1.
  static PSubgroup closure(const FieldSpec& F, std::span<const Mat2> generators, std::uint64_t cap = 0) {
    if (generators.empty()) throw Error(ErrorCode::InvalidArgument, "closure needs at least one generator");
    for (const auto& g : generators)
      if (!(g.field() == F)) throw Error(ErrorCode::FieldMismatch, "generator over another field");
    if (cap == 0) cap = std::uint64_t(F.q()) * F.q();

    std::vector<Mat2> elements{Mat2::identity(F)};
    std::unordered_set<std::uint64_t> seen{elements.front().key()};
    std::deque<std::size_t> frontier{0};
    while (!frontier.empty()) {
      const Mat2 x = elements[frontier.front()];
      frontier.pop_front();
      for (const auto& g : generators) {
        Mat2 y = x * g;
        if (!seen.insert(y.key()).second) continue;
        if (elements.size() >= cap) throw Error(ErrorCode::CapExceeded, "subgroup closure exceeds the size cap");
        elements.push_back(std::move(y));
        frontier.push_back(elements.size() - 1);
      }
    }

    std::uint64_t order = elements.size();
    std::size_t r = 0;
    while (order % F.p() == 0) {
      order /= F.p();
      ++r;
    }
    if (order != 1) throw Error(ErrorCode::NotPGroup, "group order " + std::to_string(elements.size()) + " is not a power of p");
    if (r == 0) throw Error(ErrorCode::NotPGroup, "trivial group");
    for (const auto& e : elements)
      if (!detail::is_unipotent(e)) throw Error(ErrorCode::NotPGroup, "element is not unipotent");

    std::sort(elements.begin(), elements.end(), [](const Mat2& a, const Mat2& b) { return a.key() < b.key(); });
    return PSubgroup(F, std::vector<Mat2>(generators.begin(), generators.end()), std::move(elements), r);
  }

  // The translation group {x -> x + s : s in S}.
  static PSubgroup translations(const Subspace& S) {
    std::vector<Mat2> gens;
    for (auto s : S.basis()) gens.push_back(Mat2::translation(S.field(), s));
    return closure(S.field(), gens);
  }

  const FieldSpec& field() const noexcept { return field_; }
  const std::vector<Mat2>& generators() const noexcept { return generators_; }
  const std::vector<Mat2>& elements() const noexcept { return elements_; }
  std::uint64_t order() const noexcept { return elements_.size(); }
  std::size_t exponent() const noexcept { return r_; }  // order = p^exponent

  bool contains(const Mat2& m) const {
    return std::binary_search(elements_.begin(), elements_.end(), m,
                              [](const Mat2& a, const Mat2& b) { return a.key() < b.key(); });
  }

  // B^{-1} H B
  PSubgroup conjugated(const Mat2& B) const {
    const Mat2 Binv = B.inverse();
    std::vector<Mat2> gens;
    for (const auto& g : generators_) gens.push_back(Binv * g * B);
    return closure(field_, gens);
  }

 private:
  PSubgroup(FieldSpec F, std::vector<Mat2> gens, std::vector<Mat2> elements, std::size_t r)
      : field_(std::move(F)), generators_(std::move(gens)), elements_(std::move(elements)), r_(r) {}

  FieldSpec field_;
  std::vector<Mat2> generators_;
  std::vector<Mat2> elements_;
  std::size_t r_;
};

struct Conjugation {
  Mat2 conjugator;  // A with A^{-1} E A = [[1, s], [0, 1]] for every E in H
  Subspace translations;
};

// Sends the common fixed line of H to the first basis vector.
inline Conjugation conjugate_to_translations(const PSubgroup& H) {
  const auto& F = H.field();
  std::optional<std::array<Elem, 2>> line;
  for (const auto& g : H.generators()) {
    if (g.is_identity()) continue;
    const auto& e = g.entries();
    // E - I has rank one; (-r1, r0) spans its kernel for any nonzero row (r0, r1).
    Elem r0 = F.sub(e[0], 1), r1 = e[1];
    if (r0 == 0 && r1 == 0) {
      r0 = e[2];
      r1 = F.sub(e[3], 1);
    }
    std::array<Elem, 2> v{F.neg(r1), r0};
    const Elem scale = F.inv(v[0] != 0 ? v[0] : v[1]);
    v = {F.mul(v[0], scale), F.mul(v[1], scale)};
    if (line && *line != v) throw Error(ErrorCode::NoCommonFixedLine, "generators fix different lines");
    line = v;
  }
  if (!line) throw Error(ErrorCode::NoCommonFixedLine, "all generators are the identity");
  const auto [v0, v1] = *line;
  const std::array<Elem, 2> w = v1 != 0 ? std::array<Elem, 2>{1, 0} : std::array<Elem, 2>{0, 1};
  const Mat2 A(F, {v0, w[0], v1, w[1]});
  const Mat2 Ainv = A.inverse();

  std::vector<Elem> shifts;
  for (const auto& E : H.elements()) {
    const Mat2 C = Ainv * E * A;
    if (!C.is_upper_unitriangular()) throw Error(ErrorCode::NoCommonFixedLine, "conjugate is not unitriangular");
    if (C.entries()[1] != 0) shifts.push_back(C.entries()[1]);
  }
  Subspace S = Subspace::span(F, std::span<const Elem>(shifts));
  if (S.size() != H.order()) throw std::logic_error("translation subspace size differs from the group order");
  return {A, std::move(S)};
}

inline std::uint64_t brute_force_p_subgroup_count(const PSubgroup& H, std::size_t n, std::uint64_t cap = kDefaultCap) {
  std::uint64_t count = 0;
  for_each_irreducible(
      H.field(), n,
      [&](const Poly& f) {
        for (const auto& E : H.elements())
          if (!detail::fixed_unchecked(E, f, FixMode::Projective)) return;
        ++count;
      },
      cap);
  return count;
}

// |I_H(n)| via conjugation into the translation group.
inline CountReport count_fixed_by_p_subgroup(const PSubgroup& H, std::uint64_t n, bool with_brute_force,
                                             std::uint64_t cap = kDefaultCap) {
  detail::require_report_degree(n);
  const auto conj = conjugate_to_translations(H);
  CountReport report;
  report.family = "psubgroup";
  report.q = H.field().q();
  report.group_order = H.order();
  report.degree = n;
  report.formula_count = translation_invariant_formula(H.field(), conj.translations.dimension(), n);
  if (with_brute_force) report.set_brute_force(brute_force_p_subgroup_count(H, n, cap));
  return report;
}

// The bijection I_H(n) -> I_{A^{-1} H A}(n), f -> monic multiple of A o f.
inline Poly normalized_conjugation_map(const PSubgroup& H, const Mat2& A, const Poly& f) {
  detail::require_fixable(f);
  for (const auto& E : H.elements())
    if (!detail::fixed_unchecked(E, f, FixMode::Projective)) throw Error(ErrorCode::NotFixed, "f is not fixed by H");
  return normalize_monic(act(A, f));
}

}  // namespace glfix
