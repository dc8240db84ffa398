#include <doctest.h>

#include <algorithm>

#include "shiftkit/error.hpp"
#include "shiftkit/exterior.hpp"

using namespace shiftkit;

namespace {

// Sign of the permutation that sorts the concatenated index list.
int sort_sign(std::vector<int> v) {
  int sign = 1;
  for (std::size_t i = 0; i < v.size(); ++i) {
    for (std::size_t j = 0; j + 1 < v.size() - i; ++j) {
      if (v[j] > v[j + 1]) {
        std::swap(v[j], v[j + 1]);
        sign = -sign;
      }
    }
  }
  return sign;
}

}  // namespace

TEST_CASE("wedge examples") {
  const auto e1 = make_monomial(3, {1});
  const auto e2 = make_monomial(3, {2});
  auto w = wedge(e1, e2);
  CHECK(w.sign == 1);
  CHECK(w.monomial.support == mask_of({1, 2}));
  w = wedge(e2, e1);
  CHECK(w.sign == -1);
  w = wedge(make_monomial(3, {1, 3}), e2);
  CHECK(w.sign == -1);
  CHECK(w.monomial.support == mask_of({1, 2, 3}));
  CHECK(wedge(e1, e1).sign == 0);
  CHECK_THROWS_AS(wedge(e1, make_monomial(4, {2})), Error);
}

TEST_CASE("wedge signs agree with permutation parity") {
  const int n = 5;
  for (Mask a = 0; a < (Mask{1} << n); ++a) {
    for (Mask b = 0; b < (Mask{1} << n); ++b) {
      if (a & b) continue;
      std::vector<int> cat = vertices(a);
      for (int v : vertices(b)) cat.push_back(v);
      CHECK(wedge_sign(a, b) == sort_sign(cat));
      const int da = popcount(a);
      const int db = popcount(b);
      CHECK(wedge_sign(a, b) == ((da * db) % 2 ? -1 : 1) * wedge_sign(b, a));
    }
  }
}

TEST_CASE("wedge is associative on disjoint supports") {
  const int n = 5;
  for (Mask a = 0; a < 32; ++a) {
    for (Mask b = 0; b < 32; ++b) {
      if (a & b) continue;
      for (Mask c = 0; c < 32; ++c) {
        if ((a | b) & c) continue;
        const auto x = make_monomial(n, vertices(a));
        const auto y = make_monomial(n, vertices(b));
        const auto z = make_monomial(n, vertices(c));
        const auto left = wedge(wedge(x, y).monomial, z);
        const auto right = wedge(x, wedge(y, z).monomial);
        CHECK(wedge(x, y).sign * left.sign == wedge(y, z).sign * right.sign);
        CHECK(left.monomial == right.monomial);
      }
    }
  }
}

TEST_CASE("order examples") {
  CHECK(cmp_rlex(make_monomial(2, {2}), make_monomial(2, {1})) == std::strong_ordering::greater);
  CHECK(cmp_rlex(make_monomial(3, {1, 3}), make_monomial(3, {1, 2})) == std::strong_ordering::greater);
  CHECK(cmp_rlex(make_monomial(3, {1, 3}), make_monomial(3, {1, 3})) == std::strong_ordering::equal);
  CHECK(cmp_lex_sets(mask_of({1, 2}), mask_of({1, 3})) == std::strong_ordering::less);
  CHECK(cmp_lex_sets(mask_of({1}), mask_of({2})) == std::strong_ordering::less);
  CHECK(cmp_lex_sets(mask_of({2, 4}), mask_of({2, 4})) == std::strong_ordering::equal);
  CHECK_THROWS_AS(cmp_rlex(make_monomial(3, {1}), make_monomial(3, {1, 2})), Error);
  CHECK_THROWS_AS(cmp_lex_sets(mask_of({1}), mask_of({1, 2})), Error);
}

TEST_CASE("orders are total on each degree") {
  for (int n = 1; n <= 5; ++n) {
    for (int d = 0; d <= n; ++d) {
      const auto& ms = monomial_index(n).of_degree(d);
      for (Mask a : ms) {
        for (Mask b : ms) {
          CHECK((0 <=> cmp_rlex_masks(b, a)) == cmp_rlex_masks(a, b));
          CHECK((cmp_lex_sets(a, b) == 0) == (a == b));
          for (Mask c : ms) {
            if (cmp_rlex_masks(a, b) < 0 && cmp_rlex_masks(b, c) < 0) CHECK(cmp_rlex_masks(a, c) < 0);
            if (cmp_lex_sets(a, b) < 0 && cmp_lex_sets(b, c) < 0) CHECK(cmp_lex_sets(a, c) < 0);
          }
        }
      }
    }
  }
}

TEST_CASE("monomials of a degree") {
  auto ms = monomials_of_degree(3, 1);
  REQUIRE(ms.size() == 3);
  CHECK(ms[0].support == bit(3));
  CHECK(ms[1].support == bit(2));
  CHECK(ms[2].support == bit(1));
  ms = monomials_of_degree(3, 3);
  REQUIRE(ms.size() == 1);
  CHECK(ms[0].support == mask_of({1, 2, 3}));
  ms = monomials_of_degree(4, 0);
  REQUIRE(ms.size() == 1);
  CHECK(ms[0].support == 0);
  CHECK_THROWS_AS(monomials_of_degree(3, 4), Error);

  for (int n = 1; n <= 6; ++n) {
    for (int d = 0; d <= n; ++d) {
      ms = monomials_of_degree(n, d);
      CHECK(ms.size() == binomial(n, d));
      for (std::size_t k = 1; k < ms.size(); ++k) CHECK(cmp_rlex(ms[k - 1], ms[k]) > 0);
      const auto& idx = monomial_index(n);
      for (std::size_t k = 0; k < ms.size(); ++k) CHECK(idx.position(ms[k].support) == k);
    }
  }
}

TEST_CASE("rendering") {
  CHECK(render_monomial(mask_of({1, 3, 4})) == "e1e3e4");
  CHECK(render_monomial(0) == "1");
  CHECK(render_set(mask_of({1, 3, 4})) == "{1,3,4}");
  CHECK(render_set(0) == "{}");
}
