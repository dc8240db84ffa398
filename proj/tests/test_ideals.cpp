#include <doctest.h>

#include "shiftkit/error.hpp"
#include "shiftkit/ideals.hpp"
#include "support/corpus.hpp"

using namespace shiftkit;

namespace {

MonomialIdeal ext(int n, const std::vector<std::vector<int>>& gens) {
  std::vector<Mask> m;
  for (const auto& g : gens) m.push_back(mask_of(g));
  return minimalize(Ring::Exterior, n, m);
}
MonomialIdeal sq(int n, const std::vector<std::vector<int>>& gens) {
  return ext(n, gens).as_ring(Ring::SymmetricSquarefree);
}

BettiTable table(std::initializer_list<std::tuple<int, int, std::uint64_t>> entries) {
  BettiTable t;
  for (auto [i, d, v] : entries) t.set(i, d, v);
  return t;
}

}  // namespace

TEST_CASE("minimal generators") {
  CHECK(ext(4, {{3, 4}, {1, 3, 4}}).masks() == std::vector<Mask>{mask_of({3, 4})});
  const auto j = ext(4, {{3, 4}, {1, 2, 4}});
  CHECK(j.size() == 2);
  CHECK(ext(4, {}).is_zero());
  CHECK_THROWS_AS(minimalize(Ring::Exterior, 3, {0}), Error);
  CHECK_THROWS_AS(minimalize(Ring::Exterior, 3, {bit(4)}), Error);
}

TEST_CASE("stability examples") {
  CHECK(stability_flags(ext(4, {{3, 4}, {1, 2, 4}})).stable);
  CHECK(stability_flags(sq(4, {{3, 4}, {1, 2, 4}})).squarefree_stable);
  CHECK_FALSE(stability_flags(ext(3, {{1, 2}})).stable);
  CHECK(stability_flags(ext(5, {{5}})).stable);
}

TEST_CASE("stability flags agree with brute force") {
  Rng rng = derive_rng(3, 0);
  for (int k = 0; k < 300; ++k) {
    const int n = 2 + k % 4;
    const auto j = testing::random_ideal(Ring::Exterior, n, rng);
    const auto flags = stability_flags(j);
    CHECK(flags.stable == testing::brute_force_stable(j, false));
    CHECK(flags.strongly_stable == testing::brute_force_stable(j, true));
    CHECK(flags.squarefree_stable == flags.stable);
    if (flags.strongly_stable) CHECK(flags.stable);
  }
  for (int k = 0; k < 40; ++k) {
    const int n = 3 + k % 3;
    const auto j = testing::random_strongly_stable(n, 1 + k % n, rng);
    CHECK(stability_flags(j).strongly_stable);
    CHECK(testing::brute_force_stable(j, true));
  }
}

TEST_CASE("strongly stable face ideals are exactly the shifted complexes") {
  for (int n = 1; n <= 4; ++n) {
    for (const auto& d : testing::all_complexes(n, false)) {
      CHECK(stability_flags(face_ideal(d, Ring::Exterior)).strongly_stable == is_shifted(d));
    }
  }
}

TEST_CASE("closed forms for stable ideals") {
  const auto i = stable_invariants(sq(4, {{3, 4}, {1, 2, 4}}));
  CHECK(*i.depth_S == 2);
  CHECK(*i.reg_S == 2);
  CHECK(*stable_invariants(ext(4, {{3, 4}, {1, 2, 4}})).depth_E == 0);
  CHECK(*stable_invariants(ext(4, {{2, 3, 4}})).depth_E == 1);
  CHECK_THROWS_AS(stable_invariants(ext(3, {{1, 2}})), Error);
}

TEST_CASE("Eliahou-Kervaire examples") {
  const auto i = sq(4, {{3, 4}, {1, 2, 4}});
  CHECK(betti_S_eliahou_kervaire(i) == table({{0, 0, 1}, {1, 2, 1}, {1, 3, 1}, {2, 4, 1}}));
  CHECK(betti_S_eliahou_kervaire(sq(4, {{3, 4}})) == table({{0, 0, 1}, {1, 2, 1}}));
  CHECK(betti_S_eliahou_kervaire(MonomialIdeal(Ring::SymmetricSquarefree, 4)) == table({{0, 0, 1}}));
  CHECK_THROWS_AS(betti_S_eliahou_kervaire(sq(3, {{1, 2}})), Error);
}

TEST_CASE("Auslander-Buchsbaum") {
  CHECK(depth_S_via_auslander_buchsbaum(betti_S_eliahou_kervaire(sq(4, {{3, 4}, {1, 2, 4}})), 4) == 2);
  CHECK(depth_S_via_auslander_buchsbaum(table({{0, 0, 1}}), 4) == 4);
  CHECK(depth_S_via_auslander_buchsbaum(table({{0, 0, 1}, {1, 2, 1}}), 4) == 3);
  CHECK_THROWS_AS(depth_S_via_auslander_buchsbaum(BettiTable{}, 4), Error);
}

TEST_CASE("Koszul oracle examples") {
  const PrimeField f;
  const auto i = sq(4, {{3, 4}, {1, 2, 4}});
  CHECK(koszul_betti_oracle(i, f, 4, 4) == betti_S_eliahou_kervaire(i));
  CHECK(koszul_betti_oracle(MonomialIdeal(Ring::SymmetricSquarefree, 3), f, 3, 3) == table({{0, 0, 1}}));
  CHECK(koszul_betti_oracle(sq(3, {{1, 2}, {1, 3}}), f, 3, 3) == table({{0, 0, 1}, {1, 2, 2}, {2, 3, 1}}));
  CHECK_THROWS_AS(koszul_betti_oracle(MonomialIdeal(Ring::SymmetricSquarefree, 7), f, 1, 1), Error);
}

TEST_CASE("Eliahou-Kervaire agrees with Koszul on squarefree stable ideals") {
  const PrimeField f;
  int seen = 0;
  for (int n = 1; n <= 4; ++n) {
    for (const auto& d : testing::all_complexes(n, false)) {
      const auto i = face_ideal(d, Ring::SymmetricSquarefree);
      if (!stability_flags(i).squarefree_stable) continue;
      ++seen;
      CHECK(betti_S_eliahou_kervaire(i) == koszul_betti_oracle(i, f, n, n));
    }
  }
  CHECK(seen > 20);
}

TEST_CASE("quotient dimensions") {
  const auto j = ext(4, {{2, 3}, {2, 4}, {3, 4}});
  CHECK(quotient_dim_degree(j, {1, 2}, 1) == 2);
  CHECK(quotient_dim_degree(j, {1}, 2) == 0);
  CHECK(quotient_dim_degree(j, {}, 0) == 1);
  CHECK(quotient_dim_degree(MonomialIdeal(Ring::Exterior, 4), {}, 2) == 6);
}

TEST_CASE("face ideals round trip") {
  for (int n = 1; n <= 4; ++n) {
    for (const auto& d : testing::all_complexes(n, false)) {
      CHECK(complex_of(face_ideal(d, Ring::Exterior)) == d);
      CHECK(face_ideal(d, Ring::SymmetricSquarefree).masks() == face_ideal(d, Ring::Exterior).masks());
    }
  }
}

TEST_CASE("quotient dimensions shrink as the prefix grows") {
  Rng rng = derive_rng(19, 0);
  for (int k = 0; k < 40; ++k) {
    const int n = 3 + k % 3;
    const auto j = testing::random_ideal(Ring::Exterior, n, rng);
    const auto s = j.as_ring(Ring::SymmetricSquarefree);
    for (int d = 0; d <= n; ++d) {
      std::vector<int> prefix;
      std::uint64_t prev_e = quotient_dim_degree(j, prefix, d);
      std::uint64_t prev_s = quotient_dim_degree(s, prefix, d);
      for (int v = 1; v <= n; ++v) {
        prefix.push_back(v);
        const std::uint64_t e = quotient_dim_degree(j, prefix, d);
        const std::uint64_t q = quotient_dim_degree(s, prefix, d);
        CHECK(e <= prev_e);
        CHECK(q <= prev_s);
        prev_e = e;
        prev_s = q;
      }
    }
  }
}
