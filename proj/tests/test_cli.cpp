#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "shiftkit/io.hpp"
#include "shiftkit/report.hpp"

using namespace shiftkit;

namespace {

struct Result {
  int code = 0;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  Result r;
  r.code = cli::run(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::string data(const char* name) { return std::string(SHIFTKIT_TEST_DATA) + "/" + name; }

}  // namespace

TEST_CASE("golden machine output for shift") {
  const auto r = run({"--seed", "1", "--machine", "shift", data("two_triangles.complex")});
  CHECK(r.code == 0);
  CHECK(r.out ==
        R"({"command":"shift","config":{"prime":2147483647,"seed":1,"trials":2},)"
        R"("input":{"complex":{"n":4,"facets":[[1,4],[2,4],[1,2,3]],"f_vector":[1,4,5,1]}},)"
        R"("shifted":{"n":4,"facets":[[1,4],[2,4],[1,2,3]],"f_vector":[1,4,5,1]},)"
        R"("gin":{"ring":"E","n":4,"generators":[[3,4],[1,2,4]]}})"
        "\n");
}

TEST_CASE("text output for shift") {
  const auto r = run({"--seed", "1", "shift", data("path.complex")});
  CHECK(r.code == 0);
  CHECK(r.out == "# seed 1 prime 2147483647 trials 2\nshifted facets: {1,2} {1,3}\nf-vector: (1, 3, 2)\ngin: (e2e3)\n");
}

TEST_CASE("invariants") {
  auto r = run({"--seed", "4", "--machine", "invariants", data("two_triangles.complex")});
  REQUIRE(r.code == 0);
  const Json j = Json::parse(r.out);
  CHECK(j["depth_E"] == 0);
  CHECK(j["depth_S"] == 2);
  CHECK(j["reg_S"] == 2);
  CHECK(j["cx_E"] == 4);
  CHECK(j["projdim_S"] == 2);

  r = run({"--seed", "4", "--machine", "invariants", data("simplex3.complex")});
  const Json s = Json::parse(r.out);
  CHECK(s["depth_E"] == 3);
  CHECK(s["depth_S"] == 3);
  CHECK(s["reg_S"] == 0);
  CHECK(s["cx_E"] == 0);
  CHECK(s["projdim_S"] == 0);
}

TEST_CASE("str-complex writes a file the other commands accept") {
  const std::string path = "str_2_0_2.complex";
  auto r = run({"--seed", "5", "str-complex", "2", "0", "2", "--output", path});
  REQUIRE(r.code == 0);
  r = run({"--seed", "5", "--machine", "invariants", path});
  REQUIRE(r.code == 0);
  const Json j = Json::parse(r.out);
  CHECK(j["depth_E"] == 0);
  CHECK(j["depth_S"] == 2);
  CHECK(j["reg_S"] == 2);
  CHECK(j["cx_E"] == 5);
  CHECK(j["projdim_S"] == 3);
  std::remove(path.c_str());
}

TEST_CASE("machine output is deterministic and seed independent") {
  const std::vector<std::vector<std::string>> commands = {
      {"shift", data("path.complex")},
      {"annihilators", data("triangle_edges.ideal")},
      {"cartan-betti", "--bound", data("triangle_edges.ideal")},
      {"betti", data("squares.ideal")},
      {"counterexample", "--ring", "S", "3", "2", "1"},
  };
  for (const auto& cmd : commands) {
    auto with = [&](std::vector<std::string> flags) {
      flags.push_back("--machine");
      flags.insert(flags.end(), cmd.begin(), cmd.end());
      return run(flags);
    };
    const auto a = with({"--seed", "8"});
    const auto b = with({"--seed", "8"});
    const auto c = with({"--seed", "9", "--trials", "3"});
    CHECK_MESSAGE(a.code == 0, cmd[0]);
    CHECK(a.out == b.out);
    Json ja = Json::parse(a.out);
    Json jc = Json::parse(c.out);
    ja.erase("config");
    jc.erase("config");
    CHECK_MESSAGE(ja == jc, cmd[0]);
  }
}

TEST_CASE("builtin suite passes under two configurations") {
  const auto a = run({"--seed", "1", "--machine", "verify", "--suite", "builtin"});
  const auto b = run({"--seed", "77", "--trials", "3", "--machine", "verify", "--suite", "builtin"});
  CHECK(a.code == 0);
  CHECK(b.code == 0);
  Json ja = Json::parse(a.out);
  Json jb = Json::parse(b.out);
  ja.erase("config");
  jb.erase("config");
  CHECK(ja == jb);
}

TEST_CASE("exit codes") {
  CHECK(cli::exit_code(ErrorKind::Parse) == 2);
  CHECK(cli::exit_code(ErrorKind::GenericityFailure) == 3);
  CHECK(cli::exit_code(ErrorKind::ShiftMismatch) == 3);
  CHECK(cli::exit_code(ErrorKind::VerificationFailure) == 4);
  CHECK(cli::exit_code(ErrorKind::ConsistencyFailure) == 4);
  CHECK(cli::exit_code(ErrorKind::InvalidArgument) == 1);

  CHECK(run({"--seed", "1", "shift", data("corrupt.complex")}).code == 2);
  CHECK(run({"--seed", "1", "shift", "/nonexistent"}).code == 2);
  CHECK(run({"--seed", "1", "str-complex", "2", "2", "1"}).code == 1);
  CHECK(run({"--seed", "1", "--trials", "1", "shift", data("path.complex")}).code == 1);
  CHECK(run({"--prime", "8", "shift", data("path.complex")}).code == 1);
  CHECK(run({"frobnicate"}).code == 1);
  CHECK(run({}).code == 1);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("machine errors are JSON") {
  const auto r = run({"--seed", "1", "--machine", "shift", data("corrupt.complex")});
  CHECK(r.code == 2);
  const Json j = Json::parse(r.out);
  CHECK(j["error"]["kind"] == "Parse");
}

TEST_CASE("the seed is always reported") {
  const auto r = run({"shift", data("path.complex")});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("# seed ", 0) == 0);
}
