#include <doctest.h>

#include "multgen/errors.hpp"
#include "multgen/io.hpp"
#include "test_util.hpp"

using namespace multgen;
using namespace multgen::testutil;

namespace {

const char* kBorelInput = R"({
  "name": "borel",
  "ambient_size": 2,
  "basis": [
    [["1", "0"], ["0", "-1"]],
    [["0", "1"], ["0", "0"]]
  ]
})";

}  // namespace

TEST_SUITE("io") {

TEST_CASE("input parsing") {
  const InputDocument doc = parse_input(kBorelInput);
  CHECK(doc.name == "borel");
  CHECK(doc.ambient_size == 2);
  REQUIRE(doc.basis.size() == 2);
  CHECK(doc.basis[0] == QMatrix::diagonal(vec({1, -1})));
  CHECK_FALSE(doc.declared.has_value());
  const ReportDocument rep = analyze_input(doc);
  CHECK(rep.dim_g == 2);
  CHECK(rep.m_basis.size() == 2);
  CHECK(rep.is_mult_generated);
}

TEST_CASE("integer entries are accepted, floats are not") {
  const InputDocument doc =
      parse_input(R"({"ambient_size": 2, "basis": [[[0, 1], [0, 0]]]})");
  CHECK(doc.basis[0] == QMatrix::unit(2, 0, 1));
  CHECK_THROWS_AS(parse_input(R"({"ambient_size": 2, "basis": [[[0.5, 0], [0, 0]]]})"),
                  ParseError);
  CHECK_THROWS_AS(parse_input(R"({"ambient_size": 2, "basis": [[["1/0", "0"], ["0", "0"]]]})"),
                  ParseError);
}

TEST_CASE("json syntax errors carry line and column") {
  try {
    parse_input("{\n  \"ambient_size\": 2,,\n}");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
    CHECK(e.column() > 1);
  }
}

TEST_CASE("shape errors are parse errors") {
  CHECK_THROWS_AS(parse_input(R"({"basis": []})"), ParseError);
  CHECK_THROWS_AS(parse_input(R"({"ambient_size": 2, "basis": []})"), ParseError);
  CHECK_THROWS_AS(parse_input(R"({"ambient_size": 2, "basis": [[["1","0"],["0"]]]})"), ParseError);
  CHECK_THROWS_AS(parse_input(R"({"ambient_size": 0, "basis": [[["1"]]]})"), ParseError);
  CHECK_THROWS_AS(parse_input("[1, 2]"), ParseError);
}

TEST_CASE("input document round trip") {
  InputDocument doc = parse_input(kBorelInput);
  DeclaredBlocks blocks;
  blocks.nil = {vec({0, 1})};
  blocks.torus = {vec({1, 0})};
  doc.declared = blocks;
  const nlohmann::json j = input_to_json(doc);
  const InputDocument back = input_from_json(j);
  CHECK(input_to_json(back) == j);
  CHECK(back.ambient_size == doc.ambient_size);
  CHECK(back.basis == doc.basis);
  REQUIRE(back.declared.has_value());
  CHECK(back.declared->nil == doc.declared->nil);
}

TEST_CASE("declared blocks are verified during analysis") {
  InputDocument doc = parse_input(kBorelInput);
  DeclaredBlocks good;
  good.nil = {vec({0, 1})};
  good.torus = {vec({1, 0})};
  doc.declared = good;
  const ReportDocument rep = analyze_input(doc);
  CHECK(rep.nil_basis.size() == 1);
  CHECK(rep.torus_basis.size() == 1);

  DeclaredBlocks fake;
  fake.nil = {vec({1, 0})};  // h is not nilpotent
  fake.torus = {vec({0, 1})};
  doc.declared = fake;
  CHECK_THROWS_AS(analyze_input(doc), InputNotAlgebraic);
}

TEST_CASE("report serialization round trips") {
  const ReportDocument rep = analyze_input(input_from_builtin(builtin("paper-ex")));
  const nlohmann::json j = report_to_json(rep);
  const ReportDocument back = report_from_json(j);
  CHECK(report_to_json(back) == j);
  CHECK(back.dim_g == rep.dim_g);
  CHECK(back.m_basis == rep.m_basis);
  CHECK(back.prop_conditions == rep.prop_conditions);
  CHECK(back.unipotent_generators == rep.unipotent_generators);
  CHECK(back.timing_us == rep.timing_us);
}

TEST_CASE("report carries the group-level generators") {
  const ReportDocument rep = analyze_input(input_from_builtin(builtin("paper-ex")));
  REQUIRE(rep.unipotent_generators.size() == 3);
  for (const auto& u : rep.unipotent_generators) {
    QMatrix d = u - QMatrix::identity(4);
    QMatrix p = d;
    for (int k = 1; k < 4; ++k) p = p * d;
    CHECK(p.is_zero());  // unipotent
  }
  REQUIRE(rep.reductive_generators.size() == 1);
  CHECK(rep.reductive_generators[0] == QMatrix::unit(4, 1, 1));
}

TEST_CASE("pretty rendering mentions the headline facts") {
  const ReportDocument rep = analyze_input(input_from_builtin(builtin("paper-ex")));
  const std::string text = render_pretty(rep);
  CHECK(text.find("is_mult_generated = false") != std::string::npos);
  CHECK(text.find("oracle agreement: yes") != std::string::npos);
  CHECK(text.find("Lie(G^mult) basis (dim 4)") != std::string::npos);
  // Block-style general element: one parameter per basis vector, the two
  // directions outside Lie(G^mult) stay zero.
  CHECK(text.find("general element of Lie(G^mult) (parameters c1..c4)") != std::string::npos);
  CHECK(text.find("[ 0  c2  0  c3 ]") != std::string::npos);
  CHECK(text.find("[ 0  c1  0  c4 ]") != std::string::npos);
}

}  // TEST_SUITE
