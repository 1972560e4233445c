// Counts irreducible polynomials over F_4 fixed by a few groups of affine
// substitutions, comparing the closed forms with exhaustive search.
//
//   ./count_invariants [max_degree]

#include <cstdlib>
#include <iostream>
#include <vector>

#include "glfix/psubgroup.hpp"
#include "glfix/text.hpp"

using namespace glfix;

static void print(const char* label, const CountReport& r) {
  std::cout << "  " << label << " n=" << r.degree << "  formula " << r.formula_count;
  if (r.brute_force_count) std::cout << "  search " << *r.brute_force_count << (r.ok() ? "" : "  MISMATCH");
  std::cout << "\n";
}

int main(int argc, char** argv) {
  const std::uint64_t max_degree = argc > 1 ? std::strtoull(argv[1], nullptr, 10) : 8;
  const auto F = make_field(2, 2);
  std::cout << "F_4 = F_2[t]/(" << format_modulus(F) << ")\n";

  std::cout << "x -> x + 1:\n";
  const auto S = Subspace::prime_field(F);
  for (std::uint64_t n = 2; n <= max_degree; n += 2) print("S=F_2", count_translation_invariant(S, n, true));

  std::cout << "x -> t*x (order 3):\n";
  for (std::uint64_t n = 3; n <= max_degree; n += 3) print("a=t", count_homothety_invariant(F.t(), n, true));

  // A lower unitriangular group; conjugating it gives x -> x + s for s in {0, 1}.
  const std::vector<Mat2> gens{parse_matrix(F, "[[1,0],[1,1]]")};
  const auto H = PSubgroup::closure(F, gens);
  const auto conj = conjugate_to_translations(H);
  std::cout << "H = <" << format_generators(gens) << ">, conjugated by " << format_matrix(conj.conjugator) << ":\n";
  for (std::uint64_t n = 2; n <= max_degree; n += 2) print("|H|=2", count_fixed_by_p_subgroup(H, n, true));

  // Carries the degree 4 members fixed by x -> x + 1 onto those fixed by H.
  const auto T = PSubgroup::translations(S);
  const Mat2 swap = parse_matrix(F, "[[0,1],[1,0]]");
  std::cout << "degree 4, x -> x + 1 fixed  ->  H fixed:\n";
  for (const auto& f : enumerate_translation_invariant(S, 4))
    std::cout << "  " << format_poly(f) << "  ->  " << format_poly(normalized_conjugation_map(T, swap, f)) << "\n";
  return 0;
}
