#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "multgen/cli.hpp"

using namespace multgen;

namespace {

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

CliResult run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string write_temp(const std::string& name, const std::string& content) {
  const std::string path = std::string("/tmp/multgen_test_") + name;
  std::ofstream f(path);
  f << content;
  return path;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("analyze builtin emits a machine report") {
  const CliResult r = run({"analyze", "--builtin", "paper-ex"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["multgen"]["dims"]["m"] == 4);
  CHECK(j["multgen"]["is_mult_generated"] == false);
  CHECK(j["multgen"]["oracle_agrees"] == true);
  CHECK(j["multgen"]["dims"]["center_of_m"] == 1);
}

TEST_CASE("analyze sl2 and a parabolic") {
  const CliResult sl2 = run({"analyze", "--builtin", "sl2"});
  REQUIRE(sl2.code == 0);
  auto j = nlohmann::json::parse(sl2.out);
  CHECK(j["multgen"]["dims"]["m"] == 3);
  for (const auto& c : j["multgen"]["proposition_conditions"]) CHECK(c == true);

  const CliResult par = run({"analyze", "--builtin", "parabolic-sl3-21"});
  REQUIRE(par.code == 0);
  CHECK(nlohmann::json::parse(par.out)["multgen"]["is_mult_generated"] == true);
}

TEST_CASE("analyze a file, write the report out") {
  const std::string in = write_temp("borel.json", R"({
    "ambient_size": 2,
    "basis": [[["1","0"],["0","-1"]], [["0","1"],["0","0"]]]
  })");
  const std::string outfile = "/tmp/multgen_test_report.json";
  const CliResult r = run({"analyze", in, "--out", outfile});
  REQUIRE(r.code == 0);
  std::ifstream f(outfile);
  REQUIRE(f.good());
  nlohmann::json j;
  f >> j;
  CHECK(j["multgen"]["is_mult_generated"] == true);
  std::remove(in.c_str());
  std::remove(outfile.c_str());
}

TEST_CASE("exit code 1 on parse errors") {
  const CliResult missing = run({"analyze", "/tmp/definitely_not_here.json"});
  CHECK(missing.code == 1);

  const std::string bad = write_temp("bad.json", "{\n  \"ambient_size\": 2,,\n}");
  const CliResult r = run({"analyze", bad});
  CHECK(r.code == 1);
  CHECK(r.err.find("line 2") != std::string::npos);
  std::remove(bad.c_str());

  const CliResult neither = run({"analyze"});
  CHECK(neither.code == 1);
}

TEST_CASE("exit code 2 on a non-closed basis") {
  const std::string open = write_temp("open.json", R"({
    "ambient_size": 3,
    "basis": [[["0","1","0"],["0","0","0"],["0","0","0"]],
              [["0","0","0"],["0","0","1"],["0","0","0"]]]
  })");
  const CliResult r = run({"analyze", open});
  CHECK(r.code == 2);
  CHECK(r.err.find("not algebraic") != std::string::npos);
  std::remove(open.c_str());
}

TEST_CASE("exit code 2 on a fake declared block") {
  const std::string fake = write_temp("fake_declared.json", R"({
    "ambient_size": 2,
    "basis": [[["1","0"],["0","-1"]], [["0","1"],["0","0"]]],
    "declared": {"nil": [["1","0"]], "levi": [], "torus": [["0","1"]]}
  })");
  const CliResult r = run({"analyze", fake});
  CHECK(r.code == 2);
  std::remove(fake.c_str());
}

TEST_CASE("catalog lists the shipped entries") {
  const CliResult r = run({"catalog"});
  REQUIRE(r.code == 0);
  CHECK(r.out.find("paper-ex") != std::string::npos);
  CHECK(r.out.find("ga2") != std::string::npos);
  CHECK(r.out.find("parabolic-sp4") != std::string::npos);
}

TEST_CASE("check with no random inputs passes trivially") {
  const CliResult r = run({"check", "--random", "0"});
  REQUIRE(r.code == 0);
  CHECK(r.out.find("summary: PASS") != std::string::npos);
}

TEST_CASE("check runs the golden suite and a small random suite") {
  const CliResult r = run({"check", "--all", "--random", "12", "--seed", "5"});
  REQUIRE(r.code == 0);
  CHECK(r.out.find("golden catalog:      20/20") != std::string::npos);
  CHECK(r.out.find("regular subgroups:   4/4") != std::string::npos);
  CHECK(r.out.find("theorem-vs-oracle:   12/12") != std::string::npos);
  CHECK(r.out.find("summary: PASS") != std::string::npos);
}

TEST_CASE("analyze honors a correct declared block") {
  const std::string declared = write_temp("declared_ok.json", R"({
    "ambient_size": 2,
    "basis": [[["1","0"],["0","-1"]], [["0","1"],["0","0"]]],
    "declared": {"nil": [["0","1"]], "levi": [], "torus": [["1","0"]]}
  })");
  const CliResult r = run({"analyze", declared});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["structure"]["dims"]["torus"] == 1);
  CHECK(j["multgen"]["is_mult_generated"] == true);
  std::remove(declared.c_str());
}

TEST_CASE("concurrent random checks report in input order") {
  const CliResult a = run({"check", "--random", "16", "--seed", "9"});
  const CliResult b = run({"check", "--random", "16", "--seed", "9"});
  REQUIRE(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.err == b.err);
}

TEST_CASE("environment variables override flags") {
  setenv("MULTGEN_PRETTY", "1", 1);
  const CliResult r = run({"analyze", "--builtin", "paper-ex"});
  unsetenv("MULTGEN_PRETTY");
  REQUIRE(r.code == 0);
  CHECK(r.out.find("is_mult_generated = false") != std::string::npos);
}

}  // TEST_SUITE
