#include <doctest.h>

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

GenericContext ctx(std::uint64_t seed = 1) {
  GenericContext c;
  c.seed = seed;
  return c;
}

SimplicialComplex path() { return closure_from_faces(3, {mask_of({1, 3}), mask_of({2, 3})}); }
SimplicialComplex shifted_path() { return closure_from_faces(3, {mask_of({1, 2}), mask_of({1, 3})}); }

}  // namespace

TEST_CASE("context validation and streams") {
  GenericContext c;
  c.trials = 1;
  CHECK_THROWS_AS(c.validate(), Error);
  c.trials = 2;
  CHECK_NOTHROW(c.validate());
  Rng a = c.rng(purpose::kGin, 0);
  Rng b = c.rng(purpose::kGin, 1);
  Rng d = c.rng(purpose::kCartan, 0);
  const auto x = a();
  CHECK(x != b());
  CHECK(x != d());
}

TEST_CASE("transform examples") {
  const PrimeField f;
  const auto j = ext(3, {{1, 2}, {3}});
  CHECK(initial_ideal(apply_transform(MatrixFp::identity(3), j, f), 3, f) == j);

  const MatrixFp swap = MatrixFp::from_rows({{0, 1}, {1, 0}}, 2);
  CHECK(initial_ideal(apply_transform(swap, ext(2, {{1}}), f), 2, f) == ext(2, {{2}}));

  const MatrixFp g = random_invertible(3, f, derive_rng(4, 0));
  const auto top = apply_transform(g, ext(3, {{1, 2, 3}}), f);
  REQUIRE(top.size() == 1);
  REQUIRE(top[0].coeffs.size() == 1);
  CHECK(top[0].coeffs[0] == determinant(g, f));
  CHECK(initial_ideal(top, 3, f) == ext(3, {{1, 2, 3}}));

  CHECK_THROWS_AS(apply_transform(MatrixFp(3, 3), j, f), Error);
  CHECK_THROWS_AS(apply_transform(MatrixFp::identity(2), j, f), Error);
}

TEST_CASE("degree spans") {
  const PrimeField f;
  const auto gens = apply_transform(MatrixFp::identity(4), ext(4, {{3, 4}}), f);
  const auto span = ideal_degree_span(4, gens, 3, f);
  CHECK(rank(span.matrix, f) == 2);
  const auto& idx = monomial_index(4);
  for (std::size_t r = 0; r < span.matrix.rows(); ++r) {
    for (std::size_t c = 0; c < span.matrix.cols(); ++c) {
      const Mask m = idx.of_degree(3)[c];
      if (span.matrix.at(r, c) != 0) CHECK((m == mask_of({1, 3, 4}) || m == mask_of({2, 3, 4})));
    }
  }
  CHECK(rank(ideal_degree_span(4, gens, 2, f).matrix, f) == 1);
  CHECK(ideal_degree_span(4, gens, 5, f).matrix.rows() == 0);
}

TEST_CASE("initial ideals") {
  const PrimeField f;
  ExtVector v{3, 1, {5, 7, 11}};
  CHECK(initial_ideal({v}, 3, f) == ext(3, {{3}}));
  const auto j = ext(4, {{1, 2}, {2, 4}});
  CHECK(initial_ideal(apply_transform(MatrixFp::identity(4), j, f), 4, f) == j);
}

TEST_CASE("gin examples") {
  const auto j = ext(4, {{3, 4}, {1, 2, 4}});
  CHECK(gin_rlex(j, ctx()) == j);
  CHECK(gin_rlex(ext(3, {{1, 2, 3}}), ctx()) == ext(3, {{1, 2, 3}}));
  CHECK(gin_rlex(face_ideal(path(), Ring::Exterior), ctx()) == face_ideal(shifted_path(), Ring::Exterior));
  CHECK(gin_rlex(ext(3, {{1}}), ctx()) == ext(3, {{3}}));
}

TEST_CASE("symmetric gin of a strongly stable ideal") {
  const auto i = minimalize(3, std::vector<Exponents>{{0, 2, 0}, {0, 1, 1}, {0, 0, 2}});
  CHECK(gin_rlex(i, ctx()) == i);
}

TEST_CASE("shifting examples") {
  const PrimeField f;
  CHECK(exterior_shift_spans(path(), ctx()) == shifted_path());
  CHECK(f_vector(exterior_shift_spans(path(), ctx())).counts == std::vector<std::uint64_t>{1, 3, 2});
  CHECK(exterior_shift_spans(full_simplex(4), ctx()) == full_simplex(4));
  const auto two = closure_from_faces(4, {mask_of({1, 2, 3}), mask_of({1, 4}), mask_of({2, 4})});
  CHECK(exterior_shift(two, ctx()) == two);
  const auto hollow = closure_from_faces(3, {mask_of({1, 2}), mask_of({1, 3}), mask_of({2, 3})});
  CHECK(exterior_shift(hollow, ctx()) == hollow);
  CHECK(exterior_shift(path(), ctx()) == shifted_path());
}

TEST_CASE("gin is idempotent, strongly stable and keeps the Hilbert function") {
  const GenericContext c = ctx(21);
  Rng rng = derive_rng(8, 0);
  for (int k = 0; k < 60; ++k) {
    const int n = 2 + k % 5;
    const auto j = testing::random_ideal(Ring::Exterior, n, rng);
    const auto g = gin_rlex(j, c);
    CHECK(stability_flags(g).strongly_stable);
    CHECK(gin_rlex(g, c) == g);
    const auto gamma = random_invertible(static_cast<std::size_t>(n), c.field, derive_rng(99, static_cast<std::uint64_t>(k)));
    const auto image = apply_transform(gamma, j, c.field);
    for (int d = 0; d <= n; ++d) {
      CHECK(rank(ideal_degree_span(n, image, d, c.field).matrix, c.field) == g.squarefree_members(d).size());
    }
  }
}

TEST_CASE("shifting routes agree and preserve f-vectors") {
  const GenericContext c = ctx(5);
  for (int n = 1; n <= 4; ++n) {
    for (const auto& d : testing::all_complexes(n, true)) {
      const auto spans = exterior_shift_spans(d, c);
      const auto via_gin = complex_of(gin_rlex(face_ideal(d, Ring::Exterior), c));
      CHECK(spans == via_gin);
      CHECK(is_shifted(spans));
      CHECK(f_vector(spans) == f_vector(d));
      if (is_shifted(d)) CHECK(spans == d);
    }
  }
}

TEST_CASE("results do not depend on the seed") {
  Rng rng = derive_rng(12, 0);
  for (int k = 0; k < 20; ++k) {
    const auto d = testing::random_complex(5 + k % 3, rng);
    CHECK(exterior_shift(d, ctx(1)) == exterior_shift(d, ctx(2)));
  }
}
