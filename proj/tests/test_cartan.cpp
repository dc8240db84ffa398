#include <doctest.h>

#include "shiftkit/cartan.hpp"
#include "shiftkit/error.hpp"
#include "shiftkit/generic.hpp"
#include "support/corpus.hpp"

using namespace shiftkit;

namespace {

MonomialIdeal ext(int n, const std::vector<std::vector<int>>& gens) {
  std::vector<Mask> m;
  for (const auto& g : gens) m.push_back(mask_of(g));
  return minimalize(Ring::Exterior, n, m);
}

MatrixFp first_columns(const MatrixFp& g, std::size_t r) {
  std::vector<std::size_t> cols(r);
  for (std::size_t k = 0; k < r; ++k) cols[k] = k;
  return g.select_columns(cols);
}

GenericContext ctx(std::uint64_t seed = 3) {
  GenericContext c;
  c.seed = seed;
  return c;
}

BettiTable not_cm_table() {
  BettiTable t;
  t.set(0, 0, 1);
  t.set(1, 2, 1);
  t.set(1, 3, 1);
  t.set(2, 4, 1);
  return t;
}

}  // namespace

TEST_CASE("quotient bases") {
  const PrimeField f;
  const auto b = quotient_basis(ext(4, {{3, 4}}), 2, f);
  std::vector<Mask> s = b.standard();
  std::sort(s.begin(), s.end());
  std::vector<Mask> want = {mask_of({1, 2}), mask_of({1, 3}), mask_of({1, 4}), mask_of({2, 3}), mask_of({2, 4})};
  std::sort(want.begin(), want.end());
  CHECK(s == want);
  CHECK(quotient_basis(ext(4, {{3, 4}}), 0, f).size() == 1);
  CHECK(quotient_basis(ext(3, {{1}, {2}, {3}}), 1, f).size() == 0);
}

TEST_CASE("differential of a single variable is multiplication") {
  const PrimeField f;
  const int n = 4;
  MatrixFp v(4, 1);
  v.at(0, 0) = 1;
  CartanComplex c(MonomialIdeal(Ring::Exterior, n), v, f);
  for (int j = 1; j <= n; ++j) {
    const MatrixFp d = c.differential(1, j);
    CHECK(d.cols() == binomial(n, j - 1));
    CHECK(d.rows() == binomial(n, j));
    CHECK(rank(d, f) == binomial(n - 1, j - 1));
  }
}

TEST_CASE("differential squares to zero") {
  const PrimeField f;
  Rng rng = derive_rng(6, 0);
  for (int k = 0; k < 15; ++k) {
    const int n = 3 + k % 3;
    const auto j = testing::random_ideal(Ring::Exterior, n, rng);
    const std::size_t r = 1 + static_cast<std::size_t>(k) % static_cast<std::size_t>(n);
    const MatrixFp v = first_columns(random_invertible(static_cast<std::size_t>(n), f, derive_rng(7, static_cast<std::uint64_t>(k))), r);
    CartanComplex c(j, v, f);
    for (int i = 2; i <= 4; ++i) {
      for (int deg = i; deg <= i + n; ++deg) {
        const MatrixFp a = c.differential(i, deg);
        const MatrixFp b = c.differential(i - 1, deg);
        if (a.cols() == 0 || b.rows() == 0 || a.rows() == 0) continue;
        const MatrixFp prod = b.multiply(a, f);
        CHECK(prod == MatrixFp(prod.rows(), prod.cols()));
      }
    }
  }
}

TEST_CASE("homology of small cases") {
  const PrimeField f;
  const auto g = random_invertible(4, f, derive_rng(2, 0));
  CHECK(cartan_homology_dim(ext(4, {{3, 4}, {1, 2, 4}}), g, 0, 0, f) == 1);
  for (std::size_t r = 1; r <= 4; ++r) {
    const MatrixFp v = first_columns(g, r);
    for (int i = 1; i <= 3; ++i) {
      for (int j = i; j <= i + 4; ++j) CHECK(cartan_homology_dim(MonomialIdeal(Ring::Exterior, 4), v, i, j, f) == 0);
    }
  }
  MatrixFp dep(3, 2);
  dep.at(0, 0) = dep.at(0, 1) = 1;
  CHECK_THROWS_AS(CartanComplex(MonomialIdeal(Ring::Exterior, 3), dep, f), Error);
}

TEST_CASE("transfer from symmetric Betti numbers") {
  const auto t = not_cm_table();
  CHECK(betti_E_from_betti_S(t, 1, 1) == 1);
  CHECK(betti_E_from_betti_S(t, 2, 1) == 2);
  CHECK(betti_E_from_betti_S(t, 1, 0) == 0);
  CHECK(betti_E_from_betti_S(t, 0, 0) == 1);
  CHECK(betti_E_from_betti_S(t, 4, 2) == 20);
}

TEST_CASE("complexity") {
  CHECK(complexity_E(4, 4) == 0);
  CHECK(complexity_E(0, 4) == 4);
  CHECK(complexity_E(1, 4) == 3);
  CHECK_THROWS_AS(complexity_E(5, 4), Error);
}

TEST_CASE("two-triangle complex: Cartan matches the transfer") {
  const auto j = ext(4, {{3, 4}, {1, 2, 4}});
  const auto t = not_cm_table();
  const BettiTable generic = betti_E_table(j, ctx(), 4, 3);
  const BettiTable multi = betti_E_multigraded(j, 4, 3, PrimeField{});
  CHECK(generic == multi);
  for (int i = 0; i <= 4; ++i) {
    for (int s = 0; s <= 3; ++s) CHECK(multi.strand(i, s) == betti_E_from_betti_S(t, i, s));
  }
  CHECK(betti_E(j, ctx(3), 2, 4) == betti_E(j, ctx(4), 2, 4));
}

TEST_CASE("Cartan routes against the Koszul transfer for n <= 4") {
  const PrimeField f;
  for (int n = 1; n <= 4; ++n) {
    for (const auto& d : testing::all_complexes(n, false)) {
      const auto j = face_ideal(d, Ring::Exterior);
      const auto bs = koszul_betti_oracle(face_ideal(d, Ring::SymmetricSquarefree), f, n, n);
      const auto multi = betti_E_multigraded(j, 3, n, f);
      const auto generic = betti_E_table(j, ctx(), 3, n);
      CHECK(multi == generic);
      for (int i = 0; i <= 3; ++i) {
        for (int s = 0; s <= n; ++s) CHECK(multi.strand(i, s) == betti_E_from_betti_S(bs, i, s));
      }
    }
  }
}

TEST_CASE("size limits") {
  CartanLimits small;
  small.max_n = 3;
  CHECK_THROWS_AS(betti_E(ext(4, {{1}}), ctx(), 1, 1, small), Error);
}
