#pragma once

// Elementary integer number theory for the counting formulas.

#include <cstdint>
#include <numeric>
#include <utility>
#include <vector>

#include "glfix/error.hpp"

namespace glfix {

using i128 = __int128;

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Prime factorization by trial division, as (prime, exponent) pairs in ascending order.
inline std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n) {
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "factorize(0)");
  std::vector<std::pair<std::uint64_t, unsigned>> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d != 0) continue;
    unsigned e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    out.emplace_back(d, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

inline std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (auto [prime, e] : factorize(n)) out.push_back(prime);
  return out;
}

inline int moebius(std::uint64_t n) {
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "moebius(0)");
  int sign = 1;
  for (auto [prime, e] : factorize(n)) {
    if (e > 1) return 0;
    sign = -sign;
  }
  return sign;
}

inline std::uint64_t euler_phi(std::uint64_t n) {
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "euler_phi(0)");
  std::uint64_t result = n;
  for (auto [prime, e] : factorize(n)) result = result / prime * (prime - 1);
  return result;
}

// Ascending divisors d of n with gcd(d, c) = 1.
inline std::vector<std::uint64_t> divisors_coprime_to(std::uint64_t n, std::uint64_t c) {
  if (n == 0 || c == 0) throw Error(ErrorCode::InvalidArgument, "divisors_coprime_to needs n, c >= 1");
  std::vector<std::uint64_t> small, large;
  for (std::uint64_t d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    small.push_back(d);
    if (d != n / d) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  std::vector<std::uint64_t> out;
  for (auto d : small)
    if (std::gcd(d, c) == 1) out.push_back(d);
  return out;
}

inline std::vector<std::uint64_t> divisors(std::uint64_t n) { return divisors_coprime_to(n, 1); }

// base^exp, throwing Overflow past 2^100 so i128 sums stay exact.
inline i128 checked_pow(std::uint64_t base, std::uint64_t exp) {
  constexpr i128 limit = i128(1) << 100;
  i128 result = 1;
  for (std::uint64_t i = 0; i < exp; ++i) {
    result *= base;
    if (result > limit) throw Error(ErrorCode::Overflow, "integer power exceeds 2^100");
  }
  return result;
}

inline std::uint64_t narrow_count(i128 value) {
  if (value < 0 || value > i128(UINT64_MAX)) throw Error(ErrorCode::Overflow, "count does not fit in 64 bits");
  return static_cast<std::uint64_t>(value);
}

}  // namespace glfix
