#include "glfix/psubgroup.hpp"

#include <gtest/gtest.h>

#include <random>
#include <set>

#include "test_support.hpp"

namespace glfix {
namespace {

using testing::P;

Mat2 M(const FieldSpec& F, Elem a, Elem b, Elem c, Elem d) { return Mat2(F, {a, b, c, d}); }

PSubgroup group_of(const FieldSpec& F, std::vector<Mat2> gens) { return PSubgroup::closure(F, gens); }

// B^{-1} H_S B for a random nonzero subspace S and random B.
PSubgroup random_p_subgroup(const FieldSpec& F, std::mt19937_64& rng) {
  std::uniform_int_distribution<Elem> coef(1, F.q() - 1);
  std::uniform_int_distribution<int> dim(1, static_cast<int>(F.k()));
  std::vector<Elem> gens(static_cast<std::size_t>(dim(rng)));
  for (auto& g : gens) g = coef(rng);
  const auto S = Subspace::span(F, std::span<const Elem>(gens));
  return PSubgroup::translations(S).conjugated(testing::random_gl2(F, rng));
}

TEST(ClosureTest, Examples) {
  const auto F2 = make_field(2, 1);
  EXPECT_EQ(group_of(F2, {M(F2, 1, 1, 0, 1)}).order(), 2u);

  const auto F4 = make_field(2, 2);
  const auto H = group_of(F4, {M(F4, 1, 1, 0, 1), M(F4, 1, F4.t_raw(), 0, 1)});
  EXPECT_EQ(H.order(), 4u);
  EXPECT_EQ(H.exponent(), 2u);
  for (Elem s = 0; s < 4; ++s) EXPECT_TRUE(H.contains(Mat2::translation(F4, s)));

  const auto F3 = make_field(3, 1);
  try {
    group_of(F3, {M(F3, 0, 1, 1, 0)});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotPGroup);
  }
  EXPECT_THROW(group_of(F3, {Mat2::identity(F3)}), Error);
  EXPECT_THROW(group_of(F3, {}), Error);
  // Two unipotents with different fixed lines generate SL_2(F_3), of order 24.
  EXPECT_THROW(group_of(F3, {M(F3, 1, 1, 0, 1), M(F3, 1, 0, 1, 1)}), Error);
}

TEST(ClosureTest, CapIsEnforced) {
  const auto F4 = make_field(2, 2);
  const std::vector<Mat2> gens{M(F4, 1, 1, 0, 1), M(F4, 1, F4.t_raw(), 0, 1)};
  try {
    PSubgroup::closure(F4, gens, 3);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::CapExceeded);
  }
}

TEST(ClosureTest, ElementsAreUnipotentAndGroupIsClosed) {
  std::mt19937_64 rng(31);
  for (auto [p, k] : {std::pair{2u, 1u}, {3u, 1u}, {2u, 2u}, {5u, 1u}, {2u, 3u}, {3u, 2u}}) {
    const auto F = make_field(p, k);
    for (int i = 0; i < 10; ++i) {
      const auto H = random_p_subgroup(F, rng);
      for (const auto& E : H.elements()) {
        Mat2 power = Mat2::identity(F);
        for (std::uint64_t j = 0; j < H.order(); ++j) power = power * E;
        EXPECT_TRUE(power.is_identity());
        EXPECT_TRUE(detail::is_unipotent(E));
        for (const auto& G : H.elements()) EXPECT_TRUE(H.contains(E * G));
      }
    }
  }
}

TEST(ClosureTest, TranslationGroupOfWholeFieldHasOrderQ) {
  for (auto [p, k] : {std::pair{2u, 1u}, {3u, 1u}, {2u, 2u}, {2u, 3u}, {3u, 2u}, {5u, 1u}}) {
    const auto F = make_field(p, k);
    const auto H = PSubgroup::translations(Subspace::whole(F));
    EXPECT_EQ(H.order(), F.q());
    // |GL_2(F_q)| = q (q-1)^2 (q+1), so q is the full p-part.
    const std::uint64_t q = F.q();
    std::uint64_t gl_order = q * (q - 1) * (q - 1) * (q + 1);
    while (gl_order % p == 0) gl_order /= p;
    EXPECT_EQ(q * (q - 1) * (q - 1) * (q + 1) / gl_order, q);
  }
}

void expect_conjugates_to(const PSubgroup& H, const Conjugation& c) {
  const Mat2 Ainv = c.conjugator.inverse();
  std::set<Elem> shifts;
  for (const auto& E : H.elements()) {
    const Mat2 C = Ainv * E * c.conjugator;
    ASSERT_TRUE(C.is_upper_unitriangular()) << format_matrix(C);
    shifts.insert(C.entries()[1]);
  }
  const auto elems = c.translations.elements();
  EXPECT_EQ(shifts, std::set<Elem>(elems.begin(), elems.end()));
  EXPECT_EQ(c.translations.size(), H.order());
}

TEST(ConjugationTest, Examples) {
  const auto F2 = make_field(2, 1);
  const auto H = group_of(F2, {M(F2, 1, 1, 0, 1)});
  auto c = conjugate_to_translations(H);
  EXPECT_TRUE(c.conjugator.is_identity());
  EXPECT_EQ(c.translations, Subspace::prime_field(F2));

  const auto K = H.conjugated(M(F2, 1, 0, 1, 1));
  expect_conjugates_to(K, conjugate_to_translations(K));
  EXPECT_EQ(conjugate_to_translations(K).translations, Subspace::prime_field(F2));

  const auto F4 = make_field(2, 2);
  const auto H4 = group_of(F4, {M(F4, 1, 1, 0, 1), M(F4, 1, F4.t_raw(), 0, 1)});
  c = conjugate_to_translations(H4);
  EXPECT_EQ(c.translations.dimension(), 2u);
  expect_conjugates_to(H4, c);
}

TEST(ConjugationTest, RandomSubgroups) {
  std::mt19937_64 rng(32);
  for (auto [p, k] : {std::pair{2u, 1u}, {3u, 1u}, {2u, 2u}, {5u, 1u}, {2u, 3u}, {3u, 2u}}) {
    const auto F = make_field(p, k);
    for (int i = 0; i < 20; ++i) {
      const auto H = random_p_subgroup(F, rng);
      expect_conjugates_to(H, conjugate_to_translations(H));
    }
  }
}

TEST(PSubgroupCountTest, Examples) {
  const auto F2 = make_field(2, 1);
  const auto H = group_of(F2, {M(F2, 1, 1, 0, 1)});
  auto r = count_fixed_by_p_subgroup(H, 2, true);
  EXPECT_EQ(r.formula_count, 1u);
  EXPECT_EQ(r.brute_force_count, 1u);

  const auto F4 = make_field(2, 2);
  const auto H4 = group_of(F4, {M(F4, 1, 1, 0, 1), M(F4, 1, F4.t_raw(), 0, 1)});
  r = count_fixed_by_p_subgroup(H4, 4, true);
  EXPECT_EQ(r.formula_count, 0u);
  EXPECT_EQ(r.brute_force_count, 0u);

  const auto K = H.conjugated(M(F2, 1, 0, 1, 1));
  r = count_fixed_by_p_subgroup(K, 4, true);
  EXPECT_EQ(r.formula_count, 1u);
  EXPECT_EQ(r.brute_force_count, 1u);
  EXPECT_THROW(count_fixed_by_p_subgroup(H, 1, false), Error);
}

TEST(PSubgroupCountTest, FormulaMatchesBruteForceAndIsConjugationInvariant) {
  std::mt19937_64 rng(33);
  for (auto [p, k] : {std::pair{2u, 1u}, {3u, 1u}, {2u, 2u}}) {
    const auto F = make_field(p, k);
    for (int i = 0; i < 10; ++i) {
      const auto H = random_p_subgroup(F, rng);
      const auto K = H.conjugated(testing::random_gl2(F, rng));
      for (std::uint64_t n = 2; n <= 4; ++n) {
        const auto rh = count_fixed_by_p_subgroup(H, n, true);
        const auto rk = count_fixed_by_p_subgroup(K, n, true);
        EXPECT_TRUE(rh.ok());
        EXPECT_TRUE(rk.ok());
        EXPECT_EQ(rh.brute_force_count, rk.brute_force_count);
      }
    }
  }
}

TEST(PSubgroupCountTest, TranslationGroupAgreesWithTranslationCount) {
  for (auto [p, k] : {std::pair{2u, 1u}, {3u, 1u}, {2u, 2u}, {5u, 1u}, {3u, 2u}}) {
    const auto F = make_field(p, k);
    for (const auto& S : {Subspace::prime_field(F), Subspace::whole(F)}) {
      const auto H = PSubgroup::translations(S);
      for (std::uint64_t n = 2; n <= 4; ++n) {
        const auto a = count_fixed_by_p_subgroup(H, n, true);
        const auto b = count_translation_invariant(S, n, true);
        EXPECT_EQ(a.formula_count, b.formula_count);
        EXPECT_EQ(a.brute_force_count, b.brute_force_count);
      }
    }
  }
}

// Fixed by the generators implies fixed by the whole closure.
TEST(PSubgroupCountTest, GeneratorsSuffice) {
  std::mt19937_64 rng(34);
  for (auto [p, k] : {std::pair{2u, 1u}, {3u, 1u}, {2u, 2u}}) {
    const auto F = make_field(p, k);
    for (int i = 0; i < 5; ++i) {
      const auto H = random_p_subgroup(F, rng);
      for (std::size_t n = 2; n <= 4; ++n)
        for (const auto& f : enumerate_irreducibles(F, n))
          EXPECT_EQ(fixed_by_set(f, H.generators(), FixMode::Projective),
                    fixed_by_set(f, H.elements(), FixMode::Projective));
    }
  }
}

std::vector<Poly> fixed_by_group(const PSubgroup& H, std::size_t n) {
  std::vector<Poly> out;
  for (const auto& f : enumerate_irreducibles(H.field(), n))
    if (fixed_by_set(f, H.elements(), FixMode::Projective)) out.push_back(f);
  return out;
}

TEST(ConjugationMapTest, Examples) {
  const auto F2 = make_field(2, 1);
  const auto H = group_of(F2, {M(F2, 1, 1, 0, 1)});
  const Poly f = P(F2, {1, 1, 1});
  EXPECT_EQ(normalized_conjugation_map(H, Mat2::identity(F2), f), f);

  const Mat2 A = M(F2, 1, 0, 1, 1);
  const Poly g = normalized_conjugation_map(H, A, f);
  EXPECT_EQ(g.deg(), 2u);
  EXPECT_TRUE(fixed_by_set(g, H.conjugated(A).elements(), FixMode::Projective));

  EXPECT_THROW(normalized_conjugation_map(H, A, P(F2, {1, 1, 0, 1})), Error);
  EXPECT_THROW(normalized_conjugation_map(H, A, P(F2, {1, 0, 1})), Error);
}

TEST(ConjugationMapTest, BijectionOntoConjugateFixedSet) {
  std::mt19937_64 rng(35);
  for (auto [p, k] : {std::pair{2u, 1u}, {3u, 1u}, {2u, 2u}}) {
    const auto F = make_field(p, k);
    for (int i = 0; i < 5; ++i) {
      const auto H = random_p_subgroup(F, rng);
      const Mat2 A = testing::random_gl2(F, rng);
      const auto K = H.conjugated(A);
      for (std::size_t n = 2; n <= 4; ++n) {
        std::vector<Poly> image;
        for (const auto& f : fixed_by_group(H, n)) image.push_back(normalized_conjugation_map(H, A, f));
        sort_canonical(image);
        EXPECT_EQ(std::adjacent_find(image.begin(), image.end()), image.end());
        EXPECT_EQ(image, fixed_by_group(K, n));
      }
    }
  }
}

TEST(ConjugationMapTest, InjectiveOnDegreeFourOverF2) {
  const auto F2 = make_field(2, 1);
  const auto H = group_of(F2, {M(F2, 1, 1, 0, 1)});
  for (const auto& A : pgl_representatives(F2)) {
    std::set<std::vector<Elem>> images;
    const auto fixed = fixed_by_group(H, 4);
    for (const auto& f : fixed) {
      const Poly g = normalized_conjugation_map(H, A, f);
      images.emplace(g.raw().begin(), g.raw().end());
    }
    EXPECT_EQ(images.size(), fixed.size());
  }
}

// With the action's composition order, f -> A^{-1} o f does not land in the
// fixed set of A^{-1} H A in general.
TEST(ConjugationMapTest, InverseConjugatorDoesNotWork) {
  const auto F = make_field(3, 1);
  const auto H = PSubgroup::translations(Subspace::prime_field(F));
  std::size_t failures = 0;
  for (const auto& A : pgl_representatives(F)) {
    const auto K = H.conjugated(A);
    for (const auto& f : fixed_by_group(H, 3))
      if (!fixed_by_set(normalize_monic(act(A.inverse(), f)), K.elements(), FixMode::Projective)) ++failures;
  }
  EXPECT_GT(failures, 0u);
}

}  // namespace
}  // namespace glfix
