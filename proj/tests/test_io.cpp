#include <doctest.h>

#include <sstream>

#include "shiftkit/error.hpp"
#include "shiftkit/io.hpp"
#include "shiftkit/report.hpp"
#include "support/corpus.hpp"

using namespace shiftkit;

namespace {

SimplicialComplex parse(const std::string& text) {
  std::istringstream in(text);
  return parse_complex(in, "t");
}

MonomialIdeal parse_i(const std::string& text) {
  std::istringstream in(text);
  return parse_ideal(in, "t");
}

std::string parse_error(const std::string& text, bool ideal = false) {
  try {
    if (ideal) {
      parse_i(text);
    } else {
      parse(text);
    }
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Parse);
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("complex files") {
  const auto d = parse("# comment\nn 4\n\nf 1 2 3\nf 1 4\nf 2 4\n");
  CHECK(d == closure_from_faces(4, {mask_of({1, 2, 3}), mask_of({1, 4}), mask_of({2, 4})}));
  CHECK(parse("n 2\n").size() == 1);
  CHECK(read_complex_file(SHIFTKIT_TEST_DATA "/path.complex") ==
        closure_from_faces(3, {mask_of({1, 3}), mask_of({2, 3})}));
}

TEST_CASE("complex parse errors carry line numbers") {
  CHECK(parse_error("n 3\nf 1 4\n").rfind("t:2:", 0) == 0);
  CHECK(parse_error("n 3\nf 1 1\n").rfind("t:2:", 0) == 0);
  CHECK(parse_error("f 1 2\n").rfind("t:1:", 0) == 0);
  CHECK(parse_error("n 3\nq 1\n").rfind("t:2:", 0) == 0);
  CHECK(parse_error("").find("t") == 0);
  CHECK_THROWS_AS(read_complex_file(SHIFTKIT_TEST_DATA "/corrupt.complex"), Error);
  CHECK_THROWS_AS(read_complex_file("/nonexistent/file"), Error);
}

TEST_CASE("ideal files") {
  const auto e = parse_i("ring E\nn 4\ng 2 3\ng 2 4\ng 3 4\n");
  CHECK(e.ring() == Ring::Exterior);
  CHECK(e.size() == 3);
  const auto s = read_ideal_file(SHIFTKIT_TEST_DATA "/squares.ideal");
  CHECK(s.ring() == Ring::SymmetricGeneral);
  CHECK(s.size() == 3);
  const auto sq = parse_i("ring S\nn 4\ng 3 4\ng 1 2 4\n");
  CHECK(sq.ring() == Ring::SymmetricSquarefree);
  CHECK(parse_error("ring E\nn 3\ng 1 1\n", true).rfind("t:3:", 0) == 0);
  CHECK(parse_error("ring X\nn 3\n", true).rfind("t:1:", 0) == 0);
}

TEST_CASE("kind detection") {
  CHECK(detect_kind("# c\nring E\nn 2\n") == InputKind::Ideal);
  CHECK(detect_kind("n 2\nf 1\n") == InputKind::Complex);
}

TEST_CASE("round trips") {
  for (int n = 1; n <= 4; ++n) {
    for (const auto& d : testing::all_complexes(n, false)) {
      CHECK(parse(write_complex(d)) == d);
      const auto j = face_ideal(d, Ring::Exterior);
      CHECK(parse_i(write_ideal(j)) == j);
      const auto i = face_ideal(d, Ring::SymmetricSquarefree);
      CHECK(parse_i(write_ideal(i)) == i);
    }
  }
  const auto s = read_ideal_file(SHIFTKIT_TEST_DATA "/squares.ideal");
  CHECK(parse_i(write_ideal(s)) == s);
}

TEST_CASE("machine schema") {
  BettiTable b;
  b.set(0, 0, 1);
  b.set(1, 2, 1);
  b.set(2, 4, 1);
  const Json j = betti_json(b, "betti_S", Ring::SymmetricSquarefree, 4);
  CHECK(j.dump() == R"({"kind":"betti_S","ring":"S","n":4,"entries":[[0,0,1],[1,1,1],[2,2,1]]})");
  const auto d = closure_from_faces(3, {mask_of({1, 3}), mask_of({2, 3})});
  CHECK(complex_json(d).dump() == R"({"n":3,"facets":[[1,3],[2,3]],"f_vector":[1,3,2]})");
  AnnihilatorTable a(Ring::Exterior, 4);
  a.set(3, 1, 1);
  a.set(1, 2, 1);
  CHECK(alpha_json(a).dump() == R"({"kind":"alpha","ring":"E","n":4,"entries":[[1,2,1],[3,1,1]]})");
}

TEST_CASE("text rendering") {
  BettiTable b;
  b.set(0, 0, 1);
  b.set(1, 2, 1);
  b.set(1, 3, 1);
  b.set(2, 4, 1);
  CHECK(render_betti(b) == "j\\i 0 1 2\n 0: 1 . .\n 1: . 1 .\n 2: . 1 1\n");
  CHECK(render_facets({mask_of({1, 2}), mask_of({1, 3})}) == "{1,2} {1,3}");
}
