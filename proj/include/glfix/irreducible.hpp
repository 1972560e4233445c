#pragma once

// Irreducibility decisions, exhaustive enumeration of monic polynomials, and
// closed-form irreducible counts.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "glfix/error.hpp"
#include "glfix/field.hpp"
#include "glfix/numutil.hpp"
#include "glfix/poly.hpp"

namespace glfix {

// Upper bound on the number of candidates an exhaustive scan may visit.
inline constexpr std::uint64_t kDefaultCap = std::uint64_t(1) << 22;

namespace detail {

// Arithmetic modulo a fixed monic f of degree n >= 2 on raw coefficient
// vectors of length n, with scratch buffers reused across calls.
class ModRing {
 public:
  ModRing(const FieldSpec& F, std::span<const Elem> f) : F_(F), f_(f), n_(f.size() - 1), prod_(2 * n_ - 1) {}

  std::size_t n() const noexcept { return n_; }

  void mul(std::span<const Elem> a, std::span<const Elem> b, std::vector<Elem>& out) {
    std::fill(prod_.begin(), prod_.end(), 0);
    for (std::size_t i = 0; i < n_; ++i) {
      if (a[i] == 0) continue;
      for (std::size_t j = 0; j < n_; ++j) prod_[i + j] = F_.add(prod_[i + j], F_.mul(a[i], b[j]));
    }
    for (std::size_t top = prod_.size(); top-- > n_;) {
      const Elem c = prod_[top];
      if (c == 0) continue;
      const std::size_t shift = top - n_;
      for (std::size_t i = 0; i < n_; ++i) prod_[shift + i] = F_.sub(prod_[shift + i], F_.mul(c, f_[i]));
    }
    out.assign(prod_.begin(), prod_.begin() + static_cast<std::ptrdiff_t>(n_));
  }

  std::vector<Elem> pow(std::vector<Elem> base, std::uint64_t e) {
    std::vector<Elem> result(n_, 0), tmp;
    result[0] = 1;
    for (; e > 0; e >>= 1) {
      if (e & 1) {
        mul(result, base, tmp);
        result.swap(tmp);
      }
      if (e > 1) {
        mul(base, base, tmp);
        base.swap(tmp);
      }
    }
    return result;
  }

 private:
  const FieldSpec& F_;
  std::span<const Elem> f_;
  std::size_t n_;
  std::vector<Elem> prod_;
};

inline std::vector<Elem> raw_gcd(const FieldSpec& F, std::vector<Elem> a, std::vector<Elem> b) {
  auto trim = [](std::vector<Elem>& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
  };
  trim(a);
  trim(b);
  while (!b.empty()) {
    const Elem lead_inv = F.inv(b.back());
    const std::size_t db = b.size() - 1;
    while (a.size() > db) {
      const Elem c = F.mul(a.back(), lead_inv);
      const std::size_t shift = a.size() - 1 - db;
      for (std::size_t i = 0; i <= db; ++i) a[shift + i] = F.sub(a[shift + i], F.mul(c, b[i]));
      trim(a);
    }
    std::swap(a, b);
  }
  return a;
}

// Rabin's criterion for monic f of degree n >= 2: x^{q^n} = x mod f and
// gcd(x^{q^{n/l}} - x, f) = 1 for every prime l | n. The map h -> h^q is
// F_q-linear, so x^{q^i} is iterated through the matrix of x^{jq} mod f.
inline bool monic_irreducible_raw(const FieldSpec& F, std::span<const Elem> f) {
  const std::size_t n = f.size() - 1;
  if (f[0] == 0) return false;
  ModRing ring(F, f);
  std::vector<Elem> x(n, 0);
  x[1] = 1;
  const std::vector<Elem> xq = ring.pow(x, F.q());
  std::vector<std::vector<Elem>> frob_cols(n);
  frob_cols[0].assign(n, 0);
  frob_cols[0][0] = 1;
  for (std::size_t j = 1; j < n; ++j) ring.mul(frob_cols[j - 1], xq, frob_cols[j]);

  const auto primes = prime_divisors(n);
  std::vector<std::size_t> wanted;
  for (auto ell : primes) wanted.push_back(n / ell);

  std::vector<Elem> cur = x, next(n);
  std::vector<std::vector<Elem>> saved(n + 1);
  for (std::size_t i = 1; i <= n; ++i) {
    std::fill(next.begin(), next.end(), 0);
    for (std::size_t j = 0; j < n; ++j) {
      if (cur[j] == 0) continue;
      for (std::size_t r = 0; r < n; ++r) next[r] = F.add(next[r], F.mul(cur[j], frob_cols[j][r]));
    }
    cur.swap(next);
    if (std::find(wanted.begin(), wanted.end(), i) != wanted.end()) saved[i] = cur;
  }
  if (cur != x) return false;
  const std::vector<Elem> fv(f.begin(), f.end());
  for (auto w : wanted) {
    std::vector<Elem> h = saved[w];
    h[1] = F.sub(h[1], 1);
    if (raw_gcd(F, h, fv).size() != 1) return false;
  }
  return true;
}

}  // namespace detail

inline bool is_irreducible(const Poly& f) {
  if (f.is_zero() || f.deg() == 0) throw Error(ErrorCode::ConstantPolynomial, "irreducibility of a constant");
  if (f.deg() == 1) return true;
  if (f.is_monic()) return detail::monic_irreducible_raw(f.field(), f.raw());
  const Poly g = normalize_monic(f);
  return detail::monic_irreducible_raw(g.field(), g.raw());
}

inline std::uint64_t monic_count(const FieldSpec& F, std::size_t n) {
  return narrow_count(checked_pow(F.q(), n));
}

inline void check_cap(const FieldSpec& F, std::size_t n, std::uint64_t cap) {
  const i128 total = checked_pow(F.q(), n);
  if (total > i128(cap))
    throw Error(ErrorCode::CapExceeded, "q^n = " + std::to_string(static_cast<std::uint64_t>(total)) +
                                            " exceeds the enumeration cap " + std::to_string(cap));
}

// Visits every monic degree-n coefficient vector (a_0, ..., a_{n-1}, 1) in
// canonical order: a_0 varies fastest.
template <class Fn>
void for_each_monic_raw(const FieldSpec& F, std::size_t n, std::uint64_t cap, Fn&& fn) {
  check_cap(F, n, cap);
  std::vector<Elem> c(n + 1, 0);
  c[n] = 1;
  const Elem q = F.q();
  while (true) {
    fn(std::span<const Elem>(c));
    std::size_t i = 0;
    while (i < n && ++c[i] == q) c[i++] = 0;
    if (i == n) return;
  }
}

template <class Fn>
void for_each_irreducible(const FieldSpec& F, std::size_t n, Fn&& fn, std::uint64_t cap = kDefaultCap) {
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "degree must be >= 1");
  for_each_monic_raw(F, n, cap, [&](std::span<const Elem> c) {
    if (n == 1 || detail::monic_irreducible_raw(F, c)) fn(Poly(F, std::vector<Elem>(c.begin(), c.end())));
  });
}

inline std::vector<Poly> enumerate_irreducibles(const FieldSpec& F, std::size_t n, std::uint64_t cap = kDefaultCap) {
  std::vector<Poly> out;
  for_each_irreducible(F, n, [&](const Poly& f) { out.push_back(f); }, cap);
  return out;
}

// Necklace count (1/n) sum_{d|n} mu(d) q^{n/d}.
inline std::uint64_t count_irreducibles(const FieldSpec& F, std::uint64_t n) {
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "degree must be >= 1");
  i128 sum = 0;
  for (auto d : divisors(n)) sum += moebius(d) * checked_pow(F.q(), n / d);
  return narrow_count(sum / n);
}

// Number of monic irreducibles of degree n whose roots sum to a fixed nonzero
// value: (1/(qn)) sum_{d|n, gcd(d,p)=1} q^{n/d} mu(d).
inline std::uint64_t count_irreducibles_with_trace(const FieldSpec& F, std::uint64_t n) {
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "degree must be >= 1");
  i128 sum = 0;
  for (auto d : divisors_coprime_to(n, F.p())) sum += moebius(d) * checked_pow(F.q(), n / d);
  const i128 denom = i128(F.q()) * n;
  if (sum % denom != 0) throw std::logic_error("trace-restricted count is not an integer");
  return narrow_count(sum / denom);
}

// Sum of the roots, -a_{n-1}/a_n.
inline FqElem polynomial_trace(const Poly& f) {
  const std::size_t n = f.deg();
  if (n == 0) throw Error(ErrorCode::ConstantPolynomial, "trace of a constant");
  const auto& F = f.field();
  return F.element(F.neg(F.div(f.coeff_raw(n - 1), f.lead_raw())));
}

// x^p - x - b
inline Poly artin_schreier_polynomial(const FieldSpec& F, const FqElem& b) {
  if (!(b.spec() == F)) throw Error(ErrorCode::FieldMismatch, "shift from another field");
  std::vector<Elem> c(F.p() + 1, 0);
  c[F.p()] = 1;
  c[1] = F.add(c[1], F.neg(1));
  c[0] = F.add(c[0], F.neg(b.raw()));
  return Poly(F, std::move(c));
}

// For f monic irreducible of degree n, f(x^p - x - b) is irreducible iff
// Tr_{F_q/F_p}(n b - a_{n-1}) != 0.
inline bool artin_schreier_irreducible(const Poly& f, const FqElem& b) {
  if (!(b.spec() == f.field())) throw Error(ErrorCode::FieldMismatch, "shift from another field");
  if (f.is_zero() || f.deg() == 0) throw Error(ErrorCode::ConstantPolynomial, "need deg f >= 1");
  if (!f.is_monic()) throw Error(ErrorCode::NotMonic, "f must be monic");
  if (!is_irreducible(f)) throw Error(ErrorCode::ReducibleInput, "f must be irreducible");
  const auto& F = f.field();
  const std::size_t n = f.deg();
  const Elem arg = F.sub(F.times(static_cast<std::int64_t>(n % F.p()), b.raw()), f.coeff_raw(n - 1));
  return trace_to_prime(F, arg) != 0;
}

}  // namespace glfix
