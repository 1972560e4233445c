#include "glfix/field.hpp"

#include <gtest/gtest.h>

#include <cstdint>
#include <map>
#include <vector>

namespace glfix {
namespace {

using Coeffs = std::vector<std::uint32_t>;

// q-element fields exercised exhaustively.
std::vector<FieldSpec> desk_fields() {
  return {make_field(2, 1), make_field(3, 1), make_field(2, 2), make_field(5, 1),
          make_field(7, 1), make_field(2, 3), make_field(3, 2)};
}

// a^p by p-1 plain multiplications.
Elem naive_frobenius(const FieldSpec& F, Elem a) {
  Elem out = a;
  for (std::uint32_t i = 1; i < F.p(); ++i) out = F.mul(out, a);
  return out;
}

TEST(FieldTest, DefaultModulusF4) { EXPECT_EQ(make_field(2, 2).modulus(), (Coeffs{1, 1, 1})); }

TEST(FieldTest, DefaultModulusF9MatchesRootScan) {
  // Oracle: first monic quadratic in documented order with no root in F_3.
  Coeffs expected;
  for (std::uint32_t v = 0; v < 9 && expected.empty(); ++v) {
    const std::uint32_t a0 = v % 3, a1 = v / 3;
    bool has_root = false;
    for (std::uint32_t x = 0; x < 3; ++x) has_root |= (x * x + a1 * x + a0) % 3 == 0;
    if (!has_root) expected = {a0, a1, 1};
  }
  EXPECT_EQ(expected, (Coeffs{1, 0, 1}));
  EXPECT_EQ(make_field(3, 2).modulus(), expected);
}

TEST(FieldTest, ConstructionErrors) {
  auto code_of = [](auto&& fn) {
    try {
      fn();
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::InvalidArgument;
  };
  EXPECT_EQ(code_of([] { make_field(4, 1); }), ErrorCode::NotPrime);
  EXPECT_EQ(code_of([] { make_field(2, 2, Coeffs{1, 0, 1}); }), ErrorCode::ReducibleModulus);
  EXPECT_EQ(code_of([] { make_field(2, 2, Coeffs{1, 1, 0, 1}); }), ErrorCode::DegreeMismatch);
  EXPECT_EQ(code_of([] { make_field(3, 2, Coeffs{1, 0, 2}); }), ErrorCode::NotMonic);
  EXPECT_EQ(code_of([] { make_field(2, 17); }), ErrorCode::FieldTooLarge);
}

TEST(FieldTest, ExplicitModulus) {
  const auto F = make_field(2, 3, Coeffs{1, 0, 1, 1});
  EXPECT_EQ(F.q(), 8u);
  EXPECT_FALSE(F == make_field(2, 3));
  EXPECT_TRUE(F == make_field(2, 3, Coeffs{1, 0, 1, 1}));
}

TEST(FieldTest, ArithmeticExamples) {
  const auto F4 = make_field(2, 2);
  EXPECT_EQ(F4.t() * F4.t(), F4.t() + F4.one());

  const auto F5 = make_field(5, 1);
  EXPECT_EQ(F5.element(2).inv(), F5.element(3));

  const auto F9 = make_field(3, 2);
  EXPECT_EQ(F9.t() * F9.t(), F9.element(2));
}

TEST(FieldTest, PowAcceptsNegativeExponents) {
  const auto F = make_field(3, 2);
  for (Elem a = 1; a < F.q(); ++a) {
    const auto x = F.element(a);
    EXPECT_EQ(x.pow(-3) * x.pow(3), F.one());
    EXPECT_EQ(x.pow(-1), x.inv());
  }
  EXPECT_THROW(F.zero().pow(-1), Error);
  EXPECT_EQ(F.zero().pow(0), F.one());
}

TEST(FieldTest, ErrorsOnZeroDivisionAndMixedFields) {
  const auto F = make_field(5, 1);
  EXPECT_THROW(F.one() / F.zero(), Error);
  EXPECT_THROW(F.zero().inv(), Error);
  const auto G = make_field(7, 1);
  try {
    (void)(F.one() + G.one());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::FieldMismatch);
  }
}

TEST(FieldTest, AxiomsExhaustive) {
  for (const auto& F : desk_fields()) {
    const Elem q = F.q();
    for (Elem a = 0; a < q; ++a) {
      EXPECT_EQ(F.add(a, 0), a);
      EXPECT_EQ(F.mul(a, 1), a);
      EXPECT_EQ(F.add(a, F.neg(a)), 0u);
      if (a != 0) {
        EXPECT_EQ(F.mul(a, F.inv(a)), 1u);
      }
      for (Elem b = 0; b < q; ++b) {
        EXPECT_EQ(F.add(a, b), F.add(b, a));
        EXPECT_EQ(F.mul(a, b), F.mul(b, a));
        for (Elem c = 0; c < q; ++c) {
          ASSERT_EQ(F.add(F.add(a, b), c), F.add(a, F.add(b, c)));
          ASSERT_EQ(F.mul(F.mul(a, b), c), F.mul(a, F.mul(b, c)));
          ASSERT_EQ(F.mul(a, F.add(b, c)), F.add(F.mul(a, b), F.mul(a, c)));
        }
      }
    }
  }
}

TEST(FieldTest, AdditionMatchesCoordinates) {
  // Large fields skip the addition table; both paths must agree with digit sums.
  for (const auto& F : {make_field(3, 2), make_field(17, 2), make_field(3, 6)}) {
    for (Elem a = 0; a < F.q(); a += 7)
      for (Elem b = 0; b < F.q(); b += 11) {
        auto ca = F.coords(a), cb = F.coords(b);
        for (std::size_t i = 0; i < ca.size(); ++i) ca[i] = (ca[i] + cb[i]) % F.p();
        ASSERT_EQ(F.add(a, b), F.from_coords(ca).raw());
      }
  }
}

TEST(FieldTest, TraceExamples) {
  const auto F4 = make_field(2, 2);
  EXPECT_EQ(trace_to_prime(F4.t()), 1u);
  EXPECT_EQ(trace_to_prime(F4.zero()), 0u);
  const auto F9 = make_field(3, 2);
  EXPECT_EQ(trace_to_prime(F9.one()), 2u);
}

TEST(FieldTest, TraceIsLinearWithEqualFibers) {
  for (auto [p, k] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{
           {2, 1}, {3, 1}, {2, 2}, {5, 1}, {7, 1}, {2, 3}, {3, 2}, {2, 4}, {3, 3}, {5, 2}}) {
    const auto F = make_field(p, k);
    std::map<std::uint32_t, std::uint64_t> fiber;
    for (Elem a = 0; a < F.q(); ++a) {
      // Oracle: sum of iterated naive Frobenius images.
      Elem sum = 0, img = a;
      for (std::uint32_t i = 0; i < k; ++i) {
        sum = F.add(sum, img);
        img = naive_frobenius(F, img);
      }
      ASSERT_LT(sum, p);
      ASSERT_EQ(trace_to_prime(F, a), sum);
      ++fiber[sum];
      for (Elem b = 0; b < F.q(); b += 3) {
        ASSERT_EQ(trace_to_prime(F, F.add(a, b)), (trace_to_prime(F, a) + trace_to_prime(F, b)) % p);
      }
    }
    ASSERT_EQ(fiber.size(), p);
    for (auto [value, count] : fiber) EXPECT_EQ(count, F.q() / p) << F.describe();
  }
}

TEST(FieldTest, ElementOrderExamples) {
  const auto F5 = make_field(5, 1);
  EXPECT_EQ(element_order(F5.element(4)), 2u);
  const auto F4 = make_field(2, 2);
  EXPECT_EQ(element_order(F4.t()), 3u);
  EXPECT_EQ(element_order(F4.one()), 1u);
  EXPECT_THROW(element_order(F4.zero()), Error);
}

TEST(FieldTest, ElementOrderMatchesRepeatedMultiplication) {
  for (const auto& F : desk_fields()) {
    for (Elem a = 1; a < F.q(); ++a) {
      std::uint64_t k = 1;
      for (Elem x = a; x != 1; x = F.mul(x, a)) ++k;
      EXPECT_EQ(element_order(F, a), k);
      EXPECT_EQ((F.q() - 1) % k, 0u);
    }
  }
}

TEST(FieldTest, FrobeniusExamples) {
  const auto F4 = make_field(2, 2);
  EXPECT_EQ(frobenius(F4.t(), 0), F4.t());
  EXPECT_EQ(frobenius(F4.t(), 1), F4.t() + F4.one());
  EXPECT_EQ(frobenius(F4.t(), 2), F4.t());
}

TEST(FieldTest, FrobeniusIsAutomorphismFixingPrimeField) {
  for (const auto& F : desk_fields()) {
    std::uint32_t fixed = 0;
    for (Elem a = 0; a < F.q(); ++a) {
      EXPECT_EQ(F.frob(a, 1), naive_frobenius(F, a));
      if (F.frob(a, 1) == a) {
        ++fixed;
        EXPECT_LT(a, F.p());
      }
      for (Elem b = 0; b < F.q(); ++b) {
        ASSERT_EQ(F.frob(F.add(a, b), 1), F.add(F.frob(a, 1), F.frob(b, 1)));
        ASSERT_EQ(F.frob(F.mul(a, b), 1), F.mul(F.frob(a, 1), F.frob(b, 1)));
      }
    }
    EXPECT_EQ(fixed, F.p());
  }
}

TEST(FieldTest, PrimeFieldTIsRootOfModulus) {
  const auto F = make_field(5, 1, Coeffs{2, 1});  // t + 2, so t = 3
  EXPECT_EQ(F.t().raw(), 3u);
}

}  // namespace
}  // namespace glfix
