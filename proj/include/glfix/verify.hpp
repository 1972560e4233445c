#pragma once

// Verification suite: each criterion recomputes closed-form counts against
// exhaustive search, or checks a structural identity, over an explicit list of
// configurations.

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "glfix/action.hpp"
#include "glfix/field.hpp"
#include "glfix/invariant.hpp"
#include "glfix/irreducible.hpp"
#include "glfix/numutil.hpp"
#include "glfix/poly.hpp"
#include "glfix/psubgroup.hpp"
#include "glfix/text.hpp"

namespace glfix::verify {

struct Check {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct Criterion {
  std::string id;
  std::string title;
  std::vector<Check> checks;

  bool passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
  }
  void add(std::string name, bool ok, std::string detail = {}) {
    checks.push_back({std::move(name), ok, std::move(detail)});
  }
};

struct FieldParams {
  std::uint32_t p;
  std::uint32_t k;

  std::uint64_t q() const { return narrow_count(checked_pow(p, k)); }
  FieldSpec make() const { return make_field(p, k); }
  friend auto operator<=>(const FieldParams&, const FieldParams&) = default;
};

// Prime powers q <= max_q, ascending.
inline std::vector<FieldParams> fields_up_to(std::uint64_t max_q) {
  std::vector<FieldParams> out;
  for (std::uint64_t q = 2; q <= std::min<std::uint64_t>(max_q, kMaxFieldOrder); ++q) {
    const auto f = factorize(q);
    if (f.size() == 1) out.push_back({static_cast<std::uint32_t>(f[0].first), f[0].second});
  }
  return out;
}

inline std::vector<FieldParams> fields_of_orders(std::initializer_list<std::uint64_t> orders, std::uint64_t max_q = ~0ull) {
  std::vector<FieldParams> out;
  for (auto q : orders) {
    if (q > max_q) continue;
    const auto f = factorize(q);
    if (f.size() != 1) throw Error(ErrorCode::InvalidArgument, std::to_string(q) + " is not a prime power");
    out.push_back({static_cast<std::uint32_t>(f[0].first), f[0].second});
  }
  return out;
}

namespace detail {

inline std::string q_label(const FieldSpec& F) { return "q=" + std::to_string(F.q()); }

inline std::string counts_detail(const CountReport& r) {
  std::string s = "formula " + std::to_string(r.formula_count);
  if (r.brute_force_count) s += ", brute force " + std::to_string(*r.brute_force_count);
  if (r.composition_count) s += ", compositions " + std::to_string(*r.composition_count);
  return s;
}

// First a in F_q^* with multiplicative order k.
inline FqElem element_of_order(const FieldSpec& F, std::uint64_t k) {
  for (Elem a = 1; a < F.q(); ++a)
    if (element_order(F, a) == k) return F.element(a);
  throw Error(ErrorCode::InvalidArgument, "no element of order " + std::to_string(k) + " in F_" + std::to_string(F.q()));
}

inline Subspace two_dimensional(const FieldSpec& F) {
  if (F.k() < 2) throw Error(ErrorCode::InvalidArgument, "F_" + std::to_string(F.q()) + " has no 2-dimensional subspace");
  const std::vector<Elem> gens{1, F.t_raw()};
  return Subspace::span(F, std::span<const Elem>(gens));
}

inline Mat2 random_gl2(const FieldSpec& F, std::mt19937_64& rng) {
  std::uniform_int_distribution<Elem> coef(0, F.q() - 1);
  while (true) {
    const std::array<Elem, 4> e{coef(rng), coef(rng), coef(rng), coef(rng)};
    if (F.sub(F.mul(e[0], e[3]), F.mul(e[1], e[2])) != 0) return Mat2(F, e);
  }
}

inline Poly random_irreducible(const FieldSpec& F, std::size_t n, std::mt19937_64& rng) {
  std::uniform_int_distribution<Elem> coef(0, F.q() - 1);
  std::vector<Elem> c(n + 1);
  while (true) {
    for (auto& x : c) x = coef(rng);
    c[n] = 1;
    Poly f(F, c);
    if (is_irreducible(f)) return f;
  }
}

}  // namespace detail

struct TranslationCase {
  std::uint32_t p;
  std::uint32_t k;
  std::uint64_t n;
};

// |C_S(n)| for S = F_p: formula against exhaustive search, plus reference values.
inline Criterion translation_formula(std::span<const TranslationCase> cases, std::uint64_t cap) {
  static const std::map<std::tuple<std::uint32_t, std::uint32_t, std::uint64_t>, std::uint64_t> reference{
      {{2, 1, 2}, 1}, {{2, 1, 4}, 1}, {{3, 1, 3}, 2}, {{3, 1, 6}, 2}};
  Criterion c{"AC1", "translation-invariant count for S = F_p: formula vs exhaustive search", {}};
  for (const auto& tc : cases) {
    const auto F = make_field(tc.p, tc.k);
    const auto r = count_translation_invariant(Subspace::prime_field(F), tc.n, true, cap);
    const std::string name = detail::q_label(F) + " n=" + std::to_string(tc.n);
    c.add(name, r.ok(), detail::counts_detail(r));
    if (auto it = reference.find({tc.p, tc.k, tc.n}); it != reference.end())
      c.add(name + " reference value " + std::to_string(it->second),
            r.formula_count == it->second && r.brute_force_count == it->second, detail::counts_detail(r));
  }
  return c;
}

// No irreducible is invariant under a 2-dimensional S.
inline Criterion translation_high_dimension(std::span<const FieldParams> fields, std::uint64_t max_n, std::uint64_t cap) {
  Criterion c{"AC2", "translation-invariant count is zero for dim S = 2", {}};
  for (const auto& fp : fields) {
    const auto F = fp.make();
    const auto S = detail::two_dimensional(F);
    for (std::uint64_t n = 2; n <= max_n; ++n) {
      const auto r = count_translation_invariant(S, n, true, cap);
      c.add(detail::q_label(F) + " S=<" + format_subspace(S) + "> n=" + std::to_string(n),
            r.formula_count == 0 && r.brute_force_count == 0, detail::counts_detail(r));
    }
  }
  return c;
}

// Zero count when p does not divide n, for S = F_p and S = F_q.
inline Criterion translation_nondivisible(std::span<const FieldParams> fields, std::uint64_t max_n, std::uint64_t cap) {
  Criterion c{"AC3", "translation-invariant count is zero when p does not divide n", {}};
  for (const auto& fp : fields) {
    const auto F = fp.make();
    std::vector<Subspace> spaces{Subspace::prime_field(F)};
    if (F.k() > 1) spaces.push_back(Subspace::whole(F));
    for (const auto& S : spaces) {
      std::uint64_t nonzero = 0;
      std::string degrees;
      for (std::uint64_t n = 2; n <= max_n; ++n) {
        if (n % F.p() == 0) continue;
        const auto r = count_translation_invariant(S, n, true, cap);
        if (r.formula_count != 0 || r.brute_force_count != 0) ++nonzero;
        degrees += (degrees.empty() ? "" : ",") + std::to_string(n);
      }
      c.add(detail::q_label(F) + " |S|=" + std::to_string(S.size()), nonzero == 0,
            "degrees {" + degrees + "}, " + std::to_string(nonzero) + " nonzero counts");
    }
  }
  return c;
}

// The trace criterion for f(x^p - x - b) against a direct irreducibility test.
inline Criterion artin_schreier(std::span<const FieldParams> fields, std::size_t max_degree) {
  Criterion c{"AC4", "trace criterion for f(x^p - x - b) vs direct irreducibility", {}};
  for (const auto& fp : fields) {
    const auto F = fp.make();
    std::uint64_t pairs = 0, mismatches = 0;
    for (std::size_t n = 1; n <= max_degree; ++n)
      for (const auto& f : enumerate_irreducibles(F, n))
        for (Elem b = 0; b < F.q(); ++b) {
          const auto B = F.element(b);
          ++pairs;
          if (artin_schreier_irreducible(f, B) != is_irreducible(compose(f, artin_schreier_polynomial(F, B))))
            ++mismatches;
        }
    c.add(detail::q_label(F) + " deg<=" + std::to_string(max_degree), mismatches == 0,
          std::to_string(mismatches) + " mismatches in " + std::to_string(pairs) + " pairs (f, b)");
  }
  return c;
}

// Irreducibles per fixed nonzero root sum, against the closed form.
inline Criterion trace_counts(std::span<const FieldParams> fields, std::uint64_t max_n) {
  Criterion c{"AC5", "irreducible count with prescribed nonzero trace vs exhaustive tally", {}};
  for (const auto& fp : fields) {
    const auto F = fp.make();
    for (std::uint64_t n = 1; n <= max_n; ++n) {
      std::vector<std::uint64_t> tally(F.q(), 0);
      for_each_irreducible(F, n, [&](const Poly& f) { ++tally[polynomial_trace(f).raw()]; });
      const std::uint64_t expected = count_irreducibles_with_trace(F, n);
      const bool uniform = std::all_of(tally.begin() + 1, tally.end(), [&](auto v) { return v == tally[1]; });
      const bool ok = uniform && tally[1] == expected;
      c.add(detail::q_label(F) + " n=" + std::to_string(n), ok,
            "formula " + std::to_string(expected) + ", tallies " + std::to_string(*std::min_element(tally.begin() + 1, tally.end())) +
                ".." + std::to_string(*std::max_element(tally.begin() + 1, tally.end())));
    }
  }
  return c;
}

struct HomothetyCase {
  std::uint32_t p;
  std::uint32_t k;
  std::uint64_t order;  // ord(a)
  std::uint64_t n;
};

// N_a(n) against exhaustive search and against the count of irreducible F(x^k).
inline Criterion homothety(std::span<const HomothetyCase> cases, std::uint64_t cap) {
  static const std::map<std::tuple<std::uint32_t, std::uint32_t, std::uint64_t, std::uint64_t>, std::uint64_t> reference{
      {{5, 1, 2, 2}, 2}, {{7, 1, 3, 3}, 4}};
  Criterion c{"AC6", "homothety-invariant count: formula vs exhaustive search and x^k compositions", {}};
  for (const auto& hc : cases) {
    const auto F = make_field(hc.p, hc.k);
    const auto a = detail::element_of_order(F, hc.order);
    const auto r = count_homothety_invariant(a, hc.n, true, cap);
    const std::string name = detail::q_label(F) + " a=" + format_element(a) + " ord=" + std::to_string(hc.order) +
                             " n=" + std::to_string(hc.n);
    c.add(name, r.ok() && (hc.n % hc.order != 0 || r.composition_match.has_value()), detail::counts_detail(r));
    if (auto it = reference.find({hc.p, hc.k, hc.order, hc.n}); it != reference.end())
      c.add(name + " reference value " + std::to_string(it->second),
            r.formula_count == it->second && r.brute_force_count == it->second, detail::counts_detail(r));
  }
  return c;
}

// Polynomials fixed by all of PGL_2(F_q): only x^2+x+1 over F_2.
inline Criterion pgl_scan(std::span<const std::pair<FieldParams, std::size_t>> scans, std::uint64_t cap) {
  Criterion c{"AC7", "irreducibles fixed by all of PGL_2(F_q)", {}};
  for (const auto& [fp, max_degree] : scans) {
    const auto F = fp.make();
    const auto found = pgl_fixed_scan(F, max_degree, FixMode::Projective, cap);
    std::vector<Poly> expected;
    if (F.q() == 2 && max_degree >= 2) expected.push_back(Poly(F, std::vector<Elem>{1, 1, 1}));
    std::string listed;
    for (const auto& f : found) listed += (listed.empty() ? "" : ", ") + format_poly(f);
    c.add(detail::q_label(F) + " deg<=" + std::to_string(max_degree), found == expected,
          "found {" + listed + "}");
  }
  return c;
}

// Random conjugates B^{-1} H_S B: formula vs exhaustive search, and the
// exhaustive count equals that of H_S itself.
inline Criterion p_subgroups(std::span<const FieldParams> fields, int groups_per_field, std::uint64_t max_n,
                             std::uint64_t seed, std::uint64_t cap) {
  Criterion c{"AC8", "p-subgroup fixed count: formula vs exhaustive search, conjugation invariance", {}};
  std::mt19937_64 rng(seed);
  for (const auto& fp : fields) {
    const auto F = fp.make();
    std::uniform_int_distribution<Elem> coef(1, F.q() - 1);
    std::uniform_int_distribution<std::uint32_t> dim(1, F.k());
    for (int i = 0; i < groups_per_field; ++i) {
      std::vector<Elem> gens(dim(rng));
      for (auto& g : gens) g = coef(rng);
      const auto S = Subspace::span(F, std::span<const Elem>(gens));
      const auto base = PSubgroup::translations(S);
      const Mat2 B = detail::random_gl2(F, rng);
      const auto H = base.conjugated(B);
      bool ok = true;
      std::string counts;
      for (std::uint64_t n = 2; n <= max_n; ++n) {
        const auto r = count_fixed_by_p_subgroup(H, n, true, cap);
        const auto r0 = count_fixed_by_p_subgroup(base, n, true, cap);
        ok = ok && r.ok() && r0.ok() && r.brute_force_count == r0.brute_force_count;
        counts += (counts.empty() ? "" : " ") + std::to_string(n) + ":" + std::to_string(r.formula_count) + "/" +
                  std::to_string(*r.brute_force_count) + "/" + std::to_string(*r0.brute_force_count);
      }
      c.add(detail::q_label(F) + " |H|=" + std::to_string(H.order()) + " B=" + format_matrix(B), ok,
            "n:formula/brute force/unconjugated " + counts);
    }
  }
  return c;
}

struct StructuralConfig {
  std::vector<FieldParams> composition_fields;
  int triples = 200;
  std::vector<FieldParams> roundtrip_fields;
  std::uint64_t roundtrip_max_n = 6;
  std::vector<FieldParams> closed_form_fields;
  std::vector<FieldParams> additivity_fields;
  std::vector<FieldParams> inclusion_fields;
  std::uint64_t inclusion_max_n = 6;
  std::uint64_t seed = 1;
};

namespace detail {

inline void composition_checks(Criterion& c, const StructuralConfig& cfg) {
  std::mt19937_64 rng(cfg.seed);
  for (const auto& fp : cfg.composition_fields) {
    const auto F = fp.make();
    int product_order = 0, reversed_order = 0;
    std::string example;
    for (int i = 0; i < cfg.triples; ++i) {
      const Mat2 A = random_gl2(F, rng), B = random_gl2(F, rng);
      const Poly f = random_irreducible(F, 2 + static_cast<std::size_t>(i % 3), rng);
      const Poly lhs = normalize_monic(act(A, act(B, f)));
      if (lhs == normalize_monic(act(A * B, f))) {
        ++product_order;
      } else if (example.empty()) {
        example = "; first failure A=" + format_matrix(A) + " B=" + format_matrix(B) + " f=" + format_poly(f);
      }
      if (lhs == normalize_monic(act(B * A, f))) ++reversed_order;
    }
    const std::string total = std::to_string(cfg.triples);
    c.add(q_label(F) + " A o (B o f) = (AB) o f up to scalars", product_order == cfg.triples,
          std::to_string(product_order) + "/" + total + " triples agree" + example);
    c.add(q_label(F) + " A o (B o f) = (BA) o f up to scalars", reversed_order == cfg.triples,
          std::to_string(reversed_order) + "/" + total + " triples agree");

    std::uniform_int_distribution<Elem> coef(0, F.q() - 1);
    int strict = 0;
    for (int i = 0; i < cfg.triples; ++i) {
      const Mat2 A = Mat2::translation(F, coef(rng)), B = Mat2::translation(F, coef(rng));
      const Poly f = random_irreducible(F, 2 + static_cast<std::size_t>(i % 3), rng);
      if (act(A, act(B, f)) == act(A * B, f)) ++strict;
    }
    c.add(q_label(F) + " unitriangular A, B: A o (B o f) = (AB) o f exactly", strict == cfg.triples,
          std::to_string(strict) + "/" + total + " triples agree");
  }
}

inline void roundtrip_checks(Criterion& c, const StructuralConfig& cfg) {
  for (const auto& fp : cfg.roundtrip_fields) {
    const auto F = fp.make();
    std::uint64_t checked = 0, failed = 0;
    const auto S = Subspace::prime_field(F);
    const Poly P_S = subspace_polynomial(S);
    for (std::uint64_t n = F.p(); n <= cfg.roundtrip_max_n; n += F.p())
      for (const auto& g : enumerate_translation_invariant(S, n)) {
        ++checked;
        if (!(compose(decompose_translation_invariant(g, S), P_S) == g)) ++failed;
      }
    for (Elem a = 2; a < F.q(); ++a) {
      const auto A = F.element(a);
      const Poly P_a = homothety_polynomial(A);
      for (std::uint64_t n = 2; n <= cfg.roundtrip_max_n; ++n)
        for (const auto& g : enumerate_homothety_invariant(A, n)) {
          ++checked;
          if (!(compose(decompose_homothety(g, A), P_a) == g)) ++failed;
        }
    }
    c.add(q_label(F) + " decompose/compose roundtrip, n<=" + std::to_string(cfg.roundtrip_max_n), failed == 0,
          std::to_string(checked - failed) + "/" + std::to_string(checked) + " invariants reconstructed");
  }
}

inline void closed_form_checks(Criterion& c, const StructuralConfig& cfg) {
  for (const auto& fp : cfg.closed_form_fields) {
    const auto F = fp.make();
    const std::uint32_t p = F.p();
    std::uint64_t checked = 0, failed = 0;
    for (Elem a = p; a < F.q(); ++a) {
      const Elem w = F.pow(F.sub(a, F.pow(a, p)), static_cast<std::int64_t>(p) - 1);
      const Poly expected =
          Poly::monomial(F, 1, p * p) - Poly::monomial(F, F.add(1, w), p) + Poly::monomial(F, w, 1);
      const std::vector<Elem> gens{1, a};
      ++checked;
      if (!(subspace_polynomial(Subspace::span(F, std::span<const Elem>(gens))) == expected)) ++failed;
    }
    c.add(q_label(F) + " P_<1,a> closed form", failed == 0,
          std::to_string(checked - failed) + "/" + std::to_string(checked) + " values of a");
  }
}

inline void additivity_checks(Criterion& c, const StructuralConfig& cfg) {
  for (const auto& fp : cfg.additivity_fields) {
    const auto F = fp.make();
    std::vector<Subspace> spaces{Subspace::prime_field(F)};
    if (F.k() > 1) {
      spaces.push_back(two_dimensional(F));
      spaces.push_back(Subspace::whole(F));
    }
    bool ok = true;
    for (const auto& S : spaces) {
      const Poly P_S = subspace_polynomial(S);
      std::vector<Elem> val(F.q());
      for (Elem u = 0; u < F.q(); ++u) val[u] = eval_raw(P_S, u);
      for (Elem u = 0; u < F.q() && ok; ++u) {
        for (Elem v = 0; v < F.q(); ++v) ok = ok && val[F.add(u, v)] == F.add(val[u], val[v]);
        for (Elem s = 0; s < F.p(); ++s) ok = ok && val[F.mul(s, u)] == F.mul(s, val[u]);
      }
    }
    c.add(q_label(F) + " P_S additive and F_p-linear", ok, std::to_string(spaces.size()) + " subspaces, all pairs");
  }
}

// S-invariant monics of degree n are exactly the f(P_S) with deg f = n/|S|.
inline void inclusion_checks(Criterion& c, const StructuralConfig& cfg) {
  for (const auto& fp : cfg.inclusion_fields) {
    const auto F = fp.make();
    std::vector<Subspace> spaces{Subspace::prime_field(F)};
    if (F.k() > 1) spaces.push_back(Subspace::whole(F));
    for (const auto& S : spaces) {
      const Poly P_S = subspace_polynomial(S);
      bool ok = true;
      std::uint64_t members = 0;
      for (std::uint64_t n = 1; n <= cfg.inclusion_max_n; ++n) {
        std::set<std::vector<Elem>> invariant, composed;
        for_each_monic_raw(F, n, kDefaultCap, [&](std::span<const Elem> g) {
          const Poly gp(F, std::vector<Elem>(g.begin(), g.end()));
          if (is_translation_invariant(gp, S)) invariant.emplace(g.begin(), g.end());
        });
        if (n % S.size() == 0)
          for_each_monic_raw(F, n / S.size(), kDefaultCap, [&](std::span<const Elem> f) {
            const Poly g = compose(Poly(F, std::vector<Elem>(f.begin(), f.end())), P_S);
            composed.emplace(g.raw().begin(), g.raw().end());
          });
        ok = ok && invariant == composed;
        members += invariant.size();
      }
      c.add(q_label(F) + " |S|=" + std::to_string(S.size()) + " invariants = compositions with P_S, n<=" +
                std::to_string(cfg.inclusion_max_n),
            ok, std::to_string(members) + " invariant monics");
    }
  }
}

}  // namespace detail

inline Criterion structural(const StructuralConfig& cfg) {
  Criterion c{"AC9", "structural properties", {}};
  detail::composition_checks(c, cfg);
  detail::roundtrip_checks(c, cfg);
  detail::closed_form_checks(c, cfg);
  detail::additivity_checks(c, cfg);
  detail::inclusion_checks(c, cfg);
  return c;
}

// Criteria 1-9 restricted to fields with q <= max_q and degrees <= max_degree.
inline std::vector<Criterion> verify_all(std::uint64_t max_q, std::uint64_t max_degree, std::uint64_t cap,
                                         std::uint64_t seed = 1) {
  if (max_q < 2) throw Error(ErrorCode::InvalidArgument, "--max-q must be at least 2");
  if (max_degree < 2) throw Error(ErrorCode::InvalidArgument, "--max-degree must be at least 2");
  const auto cap_deg = [&](std::uint64_t d) { return std::min(d, max_degree); };
  std::vector<Criterion> out;

  std::vector<TranslationCase> tcases;
  for (auto tc : std::initializer_list<TranslationCase>{
           {2, 1, 2}, {2, 1, 4}, {2, 1, 6}, {3, 1, 3}, {3, 1, 6}, {2, 2, 2}, {2, 2, 4}, {5, 1, 5}, {3, 2, 3}})
    if (FieldParams{tc.p, tc.k}.q() <= max_q && tc.n <= max_degree) tcases.push_back(tc);
  out.push_back(translation_formula(tcases, cap));

  out.push_back(translation_high_dimension(fields_of_orders({4, 9}, max_q), cap_deg(8), cap));
  out.push_back(translation_nondivisible(fields_of_orders({2, 3, 4, 5}, max_q), cap_deg(6), cap));
  out.push_back(artin_schreier(fields_of_orders({2, 3, 4, 5, 9}, max_q), 3));
  out.push_back(trace_counts(fields_of_orders({2, 3, 4, 5}, max_q), cap_deg(5)));

  std::vector<HomothetyCase> hcases;
  for (auto hc : std::initializer_list<HomothetyCase>{{5, 1, 2, 2}, {5, 1, 2, 4}, {5, 1, 4, 4}, {7, 1, 3, 3}, {3, 2, 4, 4}})
    if (FieldParams{hc.p, hc.k}.q() <= max_q && hc.n <= max_degree) hcases.push_back(hc);
  out.push_back(homothety(hcases, cap));

  std::vector<std::pair<FieldParams, std::size_t>> scans;
  for (const auto& f : fields_of_orders({2, 3, 4}, max_q)) scans.push_back({f, cap_deg(f.q() == 2 ? 8 : 6)});
  out.push_back(pgl_scan(scans, cap));

  out.push_back(p_subgroups(fields_of_orders({2, 3, 4}, max_q), 10, cap_deg(4), seed, cap));

  StructuralConfig s;
  s.composition_fields = fields_of_orders({2, 3, 4, 5}, max_q);
  s.roundtrip_fields = fields_of_orders({2, 3, 4, 5}, max_q);
  s.roundtrip_max_n = max_degree;
  s.closed_form_fields = fields_of_orders({4, 8, 9, 25, 27}, max_q);
  for (const auto& f : fields_up_to(std::min<std::uint64_t>(max_q, 27))) s.additivity_fields.push_back(f);
  s.inclusion_fields = fields_of_orders({2, 3, 4, 5}, max_q);
  s.inclusion_max_n = cap_deg(6);
  s.seed = seed;
  out.push_back(structural(s));
  return out;
}

}  // namespace glfix::verify
