#include <doctest.h>

#include "shiftkit/annihilators.hpp"
#include "shiftkit/error.hpp"
#include "support/corpus.hpp"

using namespace shiftkit;

namespace {

MonomialIdeal ext(int n, const std::vector<std::vector<int>>& gens) {
  std::vector<Mask> m;
  for (const auto& g : gens) m.push_back(mask_of(g));
  return minimalize(Ring::Exterior, n, m);
}

GenericContext ctx(std::uint64_t seed = 9) {
  GenericContext c;
  c.seed = seed;
  return c;
}

// Nonzero entries as (i, j, value) triples.
std::vector<std::tuple<int, int, std::uint64_t>> nonzero(const AnnihilatorTable& t) {
  std::vector<std::tuple<int, int, std::uint64_t>> out;
  for (const auto& [k, v] : t.entries()) {
    if (v) out.emplace_back(k.first, k.second, v);
  }
  return out;
}

const MonomialIdeal kTwoTriangles = ext(4, {{3, 4}, {1, 2, 4}});
const MonomialIdeal kTriangleEdges = ext(4, {{2, 3}, {2, 4}, {3, 4}});
const MonomialIdeal kSquares = minimalize(3, std::vector<Exponents>{{0, 2, 0}, {0, 1, 1}, {0, 0, 2}});

SimplicialComplex hollow_triangle() {
  return closure_from_faces(3, {mask_of({1, 2}), mask_of({1, 3}), mask_of({2, 3})});
}

}  // namespace

TEST_CASE("sequence values on the triangle-edges ideal") {
  CHECK(alpha_E_sequence(kTriangleEdges, SequenceSpec::standard(4), 2, 1, PrimeField{}) == 2);
  CHECK(alpha_E_sequence(kTriangleEdges, SequenceSpec::permutation({2, 1, 3, 4}), 2, 1, PrimeField{}) == 0);
  const MonomialIdeal zero(Ring::Exterior, 4);
  const auto g = SequenceSpec::transform(random_invertible(4, PrimeField{}, derive_rng(1, 1)));
  for (int i = 1; i <= 4; ++i) {
    for (int j = 0; j <= 4; ++j) CHECK(alpha_E_sequence(zero, g, i, j, PrimeField{}) == 0);
  }
  CHECK_THROWS_AS(SequenceSpec::permutation({1, 1, 3}).validate(PrimeField{}), Error);
}

TEST_CASE("generic exterior tables") {
  CHECK(nonzero(alpha_E_generic(kTwoTriangles, ctx())) ==
        std::vector<std::tuple<int, int, std::uint64_t>>{{1, 2, 1}, {3, 1, 1}});
  CHECK(nonzero(alpha_E_generic(MonomialIdeal(Ring::Exterior, 4), ctx())).empty());
  CHECK(alpha_E_generic(kTriangleEdges, ctx()).at(2, 1) == 2);
}

TEST_CASE("standard monomial counts") {
  CHECK(alpha_from_standard_monomials(kTwoTriangles, 3, 1) == 1);
  CHECK(alpha_from_standard_monomials(kTwoTriangles, 1, 2) == 1);
  CHECK(alpha_from_standard_monomials(kTwoTriangles, 2, 5) == 0);
}

TEST_CASE("complex tables") {
  const auto two = closure_from_faces(4, {mask_of({1, 2, 3}), mask_of({1, 4}), mask_of({2, 4})});
  const auto t = alpha_complex(two, ctx());
  CHECK(t.at(3, 1) == 1);
  CHECK(t.at(1, 2) == 1);
  CHECK(depth_from_alpha(t, 4) == 0);
  CHECK(nonzero(alpha_complex(full_simplex(4), ctx())).empty());
  CHECK(depth_from_alpha(alpha_complex(full_simplex(4), ctx()), 4) == 4);
  CHECK(nonzero(alpha_complex(hollow_triangle(), ctx())) ==
        std::vector<std::tuple<int, int, std::uint64_t>>{{1, 2, 1}});
  CHECK(depth_from_alpha(alpha_complex(join_with_simplex(1, hollow_triangle()), ctx()), 4) == 1);
}

TEST_CASE("symmetric Betti numbers from annihilators") {
  const auto two = closure_from_faces(4, {mask_of({1, 2, 3}), mask_of({1, 4}), mask_of({2, 4})});
  const BettiTable b = betti_S_from_alpha(two, ctx());
  CHECK(b.at(1, 2) == 1);
  CHECK(b.at(1, 3) == 1);
  CHECK(b.at(2, 4) == 1);
  CHECK(b.entries().size() == 4);
  const BettiTable s = betti_S_from_alpha(full_simplex(3), ctx());
  CHECK(s.entries().size() == 1);
  CHECK(s.at(0, 0) == 1);
  const BettiTable h = betti_S_from_alpha(hollow_triangle(), ctx());
  CHECK(h.at(1, 3) == 1);
  CHECK(h.entries().size() == 2);
}

TEST_CASE("Cartan-Betti bound") {
  const auto rep = cartan_betti_bound_check(kTriangleEdges, ctx(), 3, 3);
  CHECK(rep.equality_everywhere);
  CHECK_FALSE(rep.entries.empty());
  const auto zero = cartan_betti_bound_check(MonomialIdeal(Ring::Exterior, 3), ctx(), 3, 3);
  for (const auto& e : zero.entries) {
    CHECK(e.h == 0);
    CHECK(e.bound == 0);
  }
  Rng rng = derive_rng(31, 0);
  for (int k = 0; k < 10; ++k) {
    const auto j = testing::random_ideal(Ring::Exterior, 3 + k % 2, rng);
    const auto r = cartan_betti_bound_check(j, ctx(), 3, 3);
    for (const auto& e : r.entries) CHECK(e.h <= e.bound);
  }
}

TEST_CASE("symmetric sequence values") {
  const auto std3 = SequenceSpec::standard(3);
  const auto swap = SequenceSpec::permutation({2, 1, 3});
  CHECK(alpha_S_sequence(kSquares, std3, 2, 1, 3) == 2);
  CHECK(alpha_S_sequence(kSquares, swap, 2, 1, 3) == 0);
  CHECK(alpha_S_sequence(kSquares, std3, 1, 1, 3) == 0);
  CHECK(alpha_S_sequence(kSquares, swap, 1, 1, 3) == 2);
}

TEST_CASE("generic symmetric tables") {
  CHECK(alpha_S_generic(kSquares, ctx()).at(2, 1) == 2);
  const auto zero = alpha_S_generic(MonomialIdeal(Ring::SymmetricGeneral, 3), ctx(), 3);
  for (const auto& [k, v] : zero.entries()) {
    if (k.first <= 3) CHECK(v == 0);
  }
  CHECK(zero.at(4, 0) == 1);
  const auto t = alpha_S_generic(kTwoTriangles.as_ring(Ring::SymmetricSquarefree), ctx());
  CHECK(t.row_zero(1));
  CHECK(t.row_zero(2));
}

TEST_CASE("counterexamples") {
  auto e = counterexample_E(4, 2, 1, ctx());
  CHECK(e.generic_i == 2);
  CHECK(e.swapped_i == 0);
  CHECK(e.generic_prev == 0);
  CHECK(e.swapped_prev == 2);
  auto s = counterexample_S(3, 2, 1, ctx());
  CHECK(s.generic_i == 2);
  CHECK(s.swapped_i == 0);
  CHECK(s.generic_prev == 0);
  CHECK(s.swapped_prev == 2);
  e = counterexample_E(5, 2, 2, ctx());
  CHECK(e.generic_i > e.swapped_i);
  CHECK(e.generic_prev < e.swapped_prev);
  CHECK(swapped_order(4, 2) == std::vector<int>{2, 1, 3, 4});
  CHECK_THROWS_AS(counterexample_E(4, 1, 1, ctx()), Error);
  CHECK_THROWS_AS(counterexample_E(4, 2, 3, ctx()), Error);
}

TEST_CASE("permutation invariance") {
  CHECK(permutation_invariance_check(kTwoTriangles, ctx()).permutations == 24);
  CHECK(permutation_invariance_check(MonomialIdeal(Ring::Exterior, 3), ctx()).permutations == 6);
  CHECK(permutation_invariance_check(kTriangleEdges, ctx()).permutations == 24);
  CHECK_THROWS_AS(permutation_invariance_check(MonomialIdeal(Ring::Exterior, 6), ctx()), Error);
}

TEST_CASE("annihilator routes agree on small complexes") {
  const GenericContext c = ctx(17);
  for (int n = 1; n <= 4; ++n) {
    for (const auto& d : testing::all_complexes(n, true)) {
      const auto j = face_ideal(d, Ring::Exterior);
      const auto g = gin_rlex(j, c);
      const auto a = alpha_E_generic(j, c);
      CHECK(a == alpha_from_standard_monomials_table(g));
      CHECK(a == alpha_complex(d, c));
      CHECK(depth_from_alpha(a, n) == *stable_invariants(g).depth_E);
      CHECK(betti_S_from_alpha_table(a, n) == betti_S_eliahou_kervaire(g.as_ring(Ring::SymmetricSquarefree)));
    }
  }
  Rng rng = derive_rng(40, 0);
  for (int k = 0; k < 30; ++k) {
    const auto j = testing::random_ideal(Ring::Exterior, 3 + k % 3, rng);
    CHECK(alpha_E_generic(j, c) == alpha_from_standard_monomials_table(gin_rlex(j, c)));
  }
}
