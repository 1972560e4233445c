#include "glfix/numutil.hpp"

#include <gtest/gtest.h>

#include <cstdint>
#include <numeric>
#include <vector>

namespace glfix {
namespace {

TEST(NumutilTest, Moebius) {
  EXPECT_EQ(moebius(1), 1);
  EXPECT_EQ(moebius(4), 0);
  EXPECT_EQ(moebius(6), 1);
  EXPECT_EQ(moebius(7), -1);
  EXPECT_EQ(moebius(30), -1);
}

TEST(NumutilTest, EulerPhi) {
  EXPECT_EQ(euler_phi(1), 1u);
  EXPECT_EQ(euler_phi(2), 1u);
  EXPECT_EQ(euler_phi(12), 4u);
}

TEST(NumutilTest, DivisorsCoprimeTo) {
  EXPECT_EQ(divisors_coprime_to(6, 2), (std::vector<std::uint64_t>{1, 3}));
  EXPECT_EQ(divisors_coprime_to(6, 1), (std::vector<std::uint64_t>{1, 2, 3, 6}));
  EXPECT_EQ(divisors_coprime_to(9, 3), (std::vector<std::uint64_t>{1}));
}

TEST(NumutilTest, ZeroIsRejected) {
  EXPECT_THROW(moebius(0), Error);
  EXPECT_THROW(euler_phi(0), Error);
  EXPECT_THROW(divisors_coprime_to(0, 1), Error);
}

TEST(NumutilTest, MoebiusSumsVanish) {
  for (std::uint64_t n = 1; n <= 1000; ++n) {
    int sum = 0;
    for (auto d : divisors(n)) sum += moebius(d);
    EXPECT_EQ(sum, n == 1 ? 1 : 0) << n;
  }
}

TEST(NumutilTest, PhiSumsToN) {
  for (std::uint64_t n = 1; n <= 1000; ++n) {
    std::uint64_t sum = 0;
    for (auto d : divisors(n)) sum += euler_phi(d);
    EXPECT_EQ(sum, n);
  }
}

TEST(NumutilTest, PhiMatchesGcdCount) {
  for (std::uint64_t n = 1; n <= 300; ++n) {
    std::uint64_t count = 0;
    for (std::uint64_t i = 1; i <= n; ++i) count += std::gcd(i, n) == 1;
    EXPECT_EQ(euler_phi(n), count) << n;
  }
}

TEST(NumutilTest, DivisorListMatchesTrialDivision) {
  for (std::uint64_t n = 1; n <= 1000; ++n) {
    std::vector<std::uint64_t> expected;
    for (std::uint64_t d = 1; d <= n; ++d)
      if (n % d == 0) expected.push_back(d);
    EXPECT_EQ(divisors_coprime_to(n, 1), expected);
  }
}

TEST(NumutilTest, CheckedPowOverflows) {
  EXPECT_EQ(checked_pow(3, 4), 81);
  EXPECT_THROW(checked_pow(2, 101), Error);
}

}  // namespace
}  // namespace glfix
