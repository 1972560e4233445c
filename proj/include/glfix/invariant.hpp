#pragma once

// Translation- and homothety-invariant polynomials.
//
// g is S-translation invariant when g(x+s) = g(x) for all s in S, an F_p
// subspace of F_q. Such g are exactly the polynomials f(P_S(x)) with
// P_S(x) = prod_{s in S} (x - s). Homothety invariance g(ax) = g(x) plays the
// same role with P_a(x) = x^k - 1, k = ord(a).

#include <algorithm>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "glfix/error.hpp"
#include "glfix/field.hpp"
#include "glfix/irreducible.hpp"
#include "glfix/numutil.hpp"
#include "glfix/poly.hpp"

namespace glfix {

// F_p-subspace of F_q stored as its reduced echelon basis over the
// coordinate vectors. Pivots are taken from the constant coordinate upward, so
// equal subspaces have identical bases.
class Subspace {
 public:
  static Subspace span(const FieldSpec& F, std::span<const Elem> gens) {
    const std::uint32_t p = F.p(), k = F.k();
    std::vector<std::vector<std::uint32_t>> rows;
    for (auto g : gens) {
      if (g >= F.q()) throw Error(ErrorCode::InvalidArgument, "generator index out of range");
      rows.push_back(F.coords(g));
    }
    std::vector<std::vector<std::uint32_t>> basis;
    for (std::uint32_t col = 0; col < k; ++col) {
      auto it = std::find_if(rows.begin(), rows.end(), [&](const auto& r) { return r[col] != 0; });
      if (it == rows.end()) continue;
      auto pivot = *it;
      rows.erase(it);
      const std::uint64_t s = detail::zp_inv(pivot[col], p);
      for (auto& c : pivot) c = static_cast<std::uint32_t>(c * s % p);
      auto eliminate = [&](std::vector<std::uint32_t>& r) {
        const std::uint64_t factor = r[col];
        if (factor == 0) return;
        for (std::uint32_t j = 0; j < k; ++j) r[j] = static_cast<std::uint32_t>((r[j] + (p - factor) * pivot[j]) % p);
      };
      for (auto& r : rows) eliminate(r);
      for (auto& b : basis) eliminate(b);
      basis.push_back(std::move(pivot));
    }
    if (basis.empty()) throw Error(ErrorCode::ZeroSpan, "generators span the zero subspace");
    std::vector<Elem> out;
    for (const auto& b : basis) out.push_back(F.from_coords(b).raw());
    return Subspace(F, std::move(out));
  }

  static Subspace span(const FieldSpec& F, std::span<const FqElem> gens) {
    std::vector<Elem> raw;
    for (const auto& g : gens) {
      if (!(g.spec() == F)) throw Error(ErrorCode::FieldMismatch, "generator from another field");
      raw.push_back(g.raw());
    }
    return span(F, std::span<const Elem>(raw));
  }

  static Subspace prime_field(const FieldSpec& F) {
    const Elem one = 1;
    return span(F, std::span<const Elem>(&one, 1));
  }

  static Subspace whole(const FieldSpec& F) {
    std::vector<Elem> gens;
    for (std::uint32_t i = 0; i < F.k(); ++i) gens.push_back(F.pow(F.t_raw(), i));
    return span(F, std::span<const Elem>(gens));
  }

  const FieldSpec& field() const noexcept { return field_; }
  const std::vector<Elem>& basis() const noexcept { return basis_; }
  std::size_t dimension() const noexcept { return basis_.size(); }
  std::uint64_t size() const { return narrow_count(checked_pow(field_.p(), basis_.size())); }

  // All p^r elements in ascending index order.
  std::vector<Elem> elements() const {
    std::vector<Elem> out{0};
    for (auto b : basis_) {
      std::vector<Elem> next;
      next.reserve(out.size() * field_.p());
      for (auto e : out) {
        Elem cur = e;
        for (std::uint32_t c = 0; c < field_.p(); ++c) {
          next.push_back(cur);
          cur = field_.add(cur, b);
        }
      }
      out = std::move(next);
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  bool contains(Elem e) const {
    const auto all = elements();
    return std::binary_search(all.begin(), all.end(), e);
  }

  // { a s : s in S }
  Subspace scaled(Elem a) const {
    if (a == 0) throw Error(ErrorCode::ZeroScalar, "scaling a subspace by zero");
    std::vector<Elem> gens;
    for (auto b : basis_) gens.push_back(field_.mul(a, b));
    return span(field_, std::span<const Elem>(gens));
  }

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.field_ == b.field_ && a.basis_ == b.basis_;
  }

 private:
  Subspace(FieldSpec F, std::vector<Elem> basis) : field_(std::move(F)), basis_(std::move(basis)) {}

  FieldSpec field_;
  std::vector<Elem> basis_;
};

inline Subspace subspace_from_generators(const FieldSpec& F, std::span<const FqElem> gens) {
  return Subspace::span(F, gens);
}

// P_S(x) = prod_{s in S} (x - s), by the direct product.
inline Poly subspace_polynomial(const Subspace& S) {
  const auto& F = S.field();
  Poly out = Poly::constant(F, 1);
  for (auto s : S.elements()) out = out * Poly::linear(F, F.neg(s));
  return out;
}

inline bool is_translation_invariant(const Poly& g, const Subspace& S) {
  if (!(g.field() == S.field())) throw Error(ErrorCode::FieldMismatch, "polynomial and subspace over different fields");
  for (auto s : S.basis())
    if (!(translate(g, g.field().element(s)) == g)) return false;
  return true;
}

namespace detail {

// Writes g = sum c_i P^i with constant digits c_i, where P(root) = 0: each
// digit is g(root) and the rest must divide exactly by P.
inline Poly peel_constant_digits(Poly g, const Poly& P, Elem root, const char* what) {
  const auto& F = g.field();
  if (g.is_zero()) return g;
  if (g.deg() % P.deg() != 0) throw Error(ErrorCode::NotInvariant, std::string(what) + ": degree not divisible");
  std::vector<Elem> digits;
  while (!g.is_zero()) {
    const Elem c = eval_raw(g, root);
    auto [quot, r] = divrem(g - Poly::constant(F, c), P);
    if (!r.is_zero()) throw Error(ErrorCode::NotInvariant, std::string(what) + ": nonzero remainder");
    digits.push_back(c);
    g = std::move(quot);
  }
  return Poly(F, std::move(digits));
}

// Binomial coefficients C(i, j) mod p for 0 <= j <= i <= n, as field elements.
inline std::vector<std::vector<Elem>> binomials_mod_p(const FieldSpec& F, std::size_t n) {
  std::vector<std::vector<Elem>> C(n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    C[i].assign(i + 1, 1);
    for (std::size_t j = 1; j < i; ++j) C[i][j] = F.add(C[i - 1][j - 1], C[i - 1][j]);
  }
  return C;
}

// Whether g(x+s) = g(x), comparing coefficients from the top down and
// stopping at the first difference.
inline bool translation_fixes(const FieldSpec& F, std::span<const Elem> g, const std::vector<Elem>& s_pow,
                              const std::vector<std::vector<Elem>>& C) {
  const std::size_t n = g.size() - 1;
  for (std::size_t j = n; j-- > 0;) {
    Elem diff = 0;
    for (std::size_t i = j + 1; i <= n; ++i)
      if (g[i] != 0) diff = F.add(diff, F.mul(F.mul(g[i], C[i][j]), s_pow[i - j]));
    if (diff != 0) return false;
  }
  return true;
}

inline std::vector<Elem> powers(const FieldSpec& F, Elem s, std::size_t n) {
  std::vector<Elem> out(n + 1, 1);
  for (std::size_t i = 1; i <= n; ++i) out[i] = F.mul(out[i - 1], s);
  return out;
}

}  // namespace detail

// The f with f(P_S(x)) = g.
inline Poly decompose_translation_invariant(const Poly& g, const Subspace& S) {
  if (!(g.field() == S.field())) throw Error(ErrorCode::FieldMismatch, "polynomial and subspace over different fields");
  return detail::peel_constant_digits(g, subspace_polynomial(S), 0, "not S-translation invariant");
}

// Some a != 0 with S2 = a S, trying a = 1 first.
inline std::optional<FqElem> linearly_equivalent(const Subspace& S, const Subspace& S2) {
  if (!(S.field() == S2.field())) throw Error(ErrorCode::FieldMismatch, "subspaces over different fields");
  const auto& F = S.field();
  if (S.dimension() != S2.dimension()) return std::nullopt;
  if (S == S2) return F.one();
  const Elem s1 = S.basis().front();
  for (auto s2 : S2.elements()) {
    if (s2 == 0) continue;
    const Elem a = F.div(s2, s1);
    if (S.scaled(a) == S2) return F.element(a);
  }
  return std::nullopt;
}

struct CountReport {
  std::string family;  // translation, homothety or psubgroup
  std::uint64_t q = 0;
  std::uint64_t group_order = 0;  // |S|, ord(a) or |H|
  std::uint64_t degree = 0;
  std::uint64_t formula_count = 0;
  std::optional<std::uint64_t> brute_force_count;
  std::optional<bool> match;
  // Homothety only: number of monic irreducible F of degree n/k with F(x^k) irreducible.
  std::optional<std::uint64_t> composition_count;
  std::optional<bool> composition_match;

  bool ok() const noexcept { return match.value_or(true) && composition_match.value_or(true); }

  void set_brute_force(std::uint64_t count) {
    brute_force_count = count;
    match = formula_count == count;
  }
};

namespace detail {

inline void require_report_degree(std::uint64_t n) {
  if (n < 2) throw Error(ErrorCode::InvalidArgument, "invariant counts are defined for degree >= 2");
}

}  // namespace detail

// |C_S(n)| for dim S = r: zero when r > 1 or p does not divide n, otherwise
// (p-1)/(pm) sum_{d|m, gcd(d,p)=1} q^{m/d} mu(d) with n = pm.
inline std::uint64_t translation_invariant_formula(const FieldSpec& F, std::size_t r, std::uint64_t n) {
  const std::uint64_t p = F.p();
  if (r > 1 || n % p != 0) return 0;
  const std::uint64_t m = n / p;
  i128 sum = 0;
  for (auto d : divisors_coprime_to(m, p)) sum += moebius(d) * checked_pow(F.q(), m / d);
  const i128 num = sum * i128(p - 1);
  const i128 den = i128(p) * m;
  if (num % den != 0) throw std::logic_error("translation-invariant count is not an integer");
  return narrow_count(num / den);
}

// Visits every monic degree-n polynomial fixed by all translations in S.
template <class Fn>
void for_each_translation_invariant_monic(const Subspace& S, std::size_t n, std::uint64_t cap, Fn&& fn) {
  const auto& F = S.field();
  const auto C = detail::binomials_mod_p(F, n);
  std::vector<std::vector<Elem>> s_pows;
  for (auto s : S.basis()) s_pows.push_back(detail::powers(F, s, n));
  for_each_monic_raw(F, n, cap, [&](std::span<const Elem> c) {
    for (const auto& sp : s_pows)
      if (!detail::translation_fixes(F, c, sp, C)) return;
    fn(c);
  });
}

// Exhaustive |C_S(n)|: every monic candidate is tested for invariance, then
// for irreducibility.
inline std::uint64_t brute_force_translation_count(const Subspace& S, std::size_t n, std::uint64_t cap = kDefaultCap) {
  std::uint64_t count = 0;
  for_each_translation_invariant_monic(S, n, cap, [&](std::span<const Elem> c) {
    if (is_irreducible(Poly(S.field(), std::vector<Elem>(c.begin(), c.end())))) ++count;
  });
  return count;
}

inline CountReport count_translation_invariant(const Subspace& S, std::uint64_t n, bool with_brute_force,
                                               std::uint64_t cap = kDefaultCap) {
  detail::require_report_degree(n);
  CountReport report;
  report.family = "translation";
  report.q = S.field().q();
  report.group_order = S.size();
  report.degree = n;
  report.formula_count = translation_invariant_formula(S.field(), S.dimension(), n);
  if (with_brute_force) report.set_brute_force(brute_force_translation_count(S, n, cap));
  return report;
}

// Members of C_S(n) in canonical order. For S = <s>, these are the
// s-rescalings s^n g(x/s) of g = f(x^p - x), f monic irreducible of degree
// n/p whose x^{m-1} coefficient has nonzero absolute trace.
inline std::vector<Poly> enumerate_translation_invariant(const Subspace& S, std::uint64_t n,
                                                         std::uint64_t cap = kDefaultCap) {
  detail::require_report_degree(n);
  const auto& F = S.field();
  if (S.dimension() != 1 || n % F.p() != 0) return {};
  const std::size_t m = n / F.p();
  const Poly as = artin_schreier_polynomial(F, F.zero());
  const FqElem s = F.element(S.basis().front());
  std::vector<Poly> out;
  for_each_irreducible(
      F, m,
      [&](const Poly& f) {
        if (trace_to_prime(F, f.coeff_raw(m - 1)) == 0) return;
        out.push_back(normalize_monic(scale_transform(compose(f, as), s)));
      },
      cap);
  sort_canonical(out);
  return out;
}

// x^k - 1 for k = ord(a), checked against prod_{i<k} (x - a^i).
inline Poly homothety_polynomial(const FqElem& a) {
  const auto& F = a.spec();
  if (a.raw() == 0 || a.raw() == 1) throw Error(ErrorCode::DegenerateScalar, "homothety needs a not in {0, 1}");
  const std::uint64_t k = element_order(a);
  Poly product = Poly::constant(F, 1);
  Elem power = 1;
  for (std::uint64_t i = 0; i < k; ++i) {
    product = product * Poly::linear(F, F.neg(power));
    power = F.mul(power, a.raw());
  }
  const Poly closed = Poly::monomial(F, 1, k) - Poly::constant(F, 1);
  if (!(product == closed)) throw std::logic_error("product over <a> differs from x^k - 1");
  return closed;
}

// The g with g(x^k - 1) = f.
inline Poly decompose_homothety(const Poly& f, const FqElem& a) {
  if (!(f.field() == a.spec())) throw Error(ErrorCode::FieldMismatch, "polynomial and scalar over different fields");
  return detail::peel_constant_digits(f, homothety_polynomial(a), 1, "not homothety invariant");
}

// N_a(n): zero unless k = ord(a) divides n; for n = mk,
// phi(k)/(mk) sum_{d|m, gcd(d,k)=1} mu(d) (q^{m/d} - 1).
inline std::uint64_t homothety_invariant_formula(const FieldSpec& F, std::uint64_t k, std::uint64_t n) {
  if (n % k != 0) return 0;
  const std::uint64_t m = n / k;
  i128 sum = 0;
  for (auto d : divisors_coprime_to(m, k)) sum += moebius(d) * (checked_pow(F.q(), m / d) - 1);
  const i128 num = sum * i128(euler_phi(k));
  const i128 den = i128(m) * k;
  if (num % den != 0) throw std::logic_error("homothety-invariant count is not an integer");
  return narrow_count(num / den);
}

inline std::uint64_t brute_force_homothety_count(const FqElem& a, std::size_t n, std::uint64_t cap = kDefaultCap) {
  const auto& F = a.spec();
  const auto a_pow = detail::powers(F, a.raw(), n);
  std::uint64_t count = 0;
  for_each_monic_raw(F, n, cap, [&](std::span<const Elem> c) {
    for (std::size_t i = 0; i <= n; ++i)
      if (c[i] != 0 && F.mul(c[i], a_pow[i]) != c[i]) return;
    if (is_irreducible(Poly(F, std::vector<Elem>(c.begin(), c.end())))) ++count;
  });
  return count;
}

// L(m, k): monic irreducible F of degree m with F(x^k) irreducible.
inline std::uint64_t count_power_compositions(const FieldSpec& F, std::size_t m, std::uint64_t k,
                                              std::uint64_t cap = kDefaultCap) {
  const Poly xk = Poly::monomial(F, 1, k);
  std::uint64_t count = 0;
  for_each_irreducible(
      F, m, [&](const Poly& f) { count += is_irreducible(compose(f, xk)) ? 1 : 0; }, cap);
  return count;
}

inline CountReport count_homothety_invariant(const FqElem& a, std::uint64_t n, bool with_brute_force,
                                             std::uint64_t cap = kDefaultCap) {
  detail::require_report_degree(n);
  if (a.raw() == 0 || a.raw() == 1) throw Error(ErrorCode::DegenerateScalar, "homothety needs a not in {0, 1}");
  const auto& F = a.spec();
  const std::uint64_t k = element_order(a);
  CountReport report;
  report.family = "homothety";
  report.q = F.q();
  report.group_order = k;
  report.degree = n;
  report.formula_count = homothety_invariant_formula(F, k, n);
  if (with_brute_force) {
    report.set_brute_force(brute_force_homothety_count(a, n, cap));
    if (n % k == 0) {
      report.composition_count = count_power_compositions(F, n / k, k, cap);
      report.composition_match = *report.composition_count == report.formula_count;
    }
  }
  return report;
}

// Monic irreducibles g(x^k - 1) of degree n, g irreducible of degree n/k, in canonical order.
inline std::vector<Poly> enumerate_homothety_invariant(const FqElem& a, std::uint64_t n,
                                                       std::uint64_t cap = kDefaultCap) {
  detail::require_report_degree(n);
  const auto& F = a.spec();
  const Poly P = homothety_polynomial(a);
  const std::uint64_t k = P.deg();
  if (n % k != 0) return {};
  std::vector<Poly> out;
  for_each_irreducible(
      F, n / k,
      [&](const Poly& g) {
        Poly h = compose(g, P);
        if (is_irreducible(h)) out.push_back(std::move(h));
      },
      cap);
  sort_canonical(out);
  return out;
}

}  // namespace glfix
