#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "npc2/harness.hpp"
#include "npc2/homology.hpp"
#include "npc2/io.hpp"
#include "npc2/moves.hpp"

using namespace npc2;

TEST_CASE("minimal document parses to a filled triangle with unit lengths") {
  ParsedComplex pc =
      parse_complex_text(R"({"vertices":[0,1,2],"triangles":[[0,1,2]]})");
  CHECK(pc.complex->vertices().size() == 3);
  CHECK(pc.complex->edges().size() == 3);  // implied by the triangle
  CHECK(pc.complex->triangles().size() == 1);
  CHECK(!pc.metric_specified);
  for (double len : pc.metric.lengths) CHECK(len == 1.0);
}

TEST_CASE("explicit lengths give the right-triangle metric") {
  ParsedComplex pc = parse_complex_text(
      R"({"vertices":[0,1,2],"triangles":[[0,1,2]],
          "lengths":{"0-1":3,"1-2":4,"0-2":5}})");
  CHECK(pc.metric_specified);
  CHECK(pc.metric.length(*pc.complex, {0, 1}) == 3.0);
  CHECK(pc.metric.length(*pc.complex, {1, 2}) == 4.0);
  CHECK(pc.metric.length(*pc.complex, {0, 2}) == 5.0);
  double angle = corner_angle(5, 3, 4);
  CHECK(angle == doctest::Approx(3.14159265358979 / 2).epsilon(1e-9));
}

TEST_CASE("documents referencing unknown vertices fail validation") {
  CHECK_THROWS_AS(parse_complex_text(R"({"vertices":[0,1,2],"triangles":[[0,1,9]]})"),
                  Error);
}

TEST_CASE("malformed documents fail with ParseError") {
  CHECK_THROWS_AS(parse_complex_text("not json"), Error);
  CHECK_THROWS_AS(parse_complex_text(R"({"triangles":[[0,1,2]]})"), Error);
  CHECK_THROWS_AS(parse_complex_text(R"({"vertices":[0],"lengths":{"zz":1}})"), Error);
}

TEST_CASE("parse-emit round trip is stable on canonical form") {
  Generated g = generate("octahedron", {});
  std::string once = emit_complex(g.complex, g.metric, g.name, Format::Machine);
  ParsedComplex pc = parse_complex_text(once);
  CHECK(*pc.complex == g.complex);
  std::string twice = emit_complex(*pc.complex, pc.metric, g.name, Format::Machine);
  CHECK(once == twice);
}

TEST_CASE("non-unit lengths survive the round trip") {
  ParsedComplex pc = parse_complex_text(
      R"({"vertices":[0,1,2],"triangles":[[0,1,2]],"lengths":{"0-1":1.5}})");
  std::string emitted = emit_complex(*pc.complex, pc.metric, "", Format::Machine);
  ParsedComplex again = parse_complex_text(emitted);
  CHECK(again.metric.length(*again.complex, {0, 1}) == 1.5);
  CHECK(*again.complex == *pc.complex);
}

TEST_CASE("subcomplex files are closure-checked against the parent") {
  auto oct = std::make_shared<const Complex2>(generate("octahedron", {}).complex);
  Subcomplex eq = parse_subcomplex_text(
      R"({"vertices":[1,2,3,4],"edges":[[1,2],[2,3],[3,4],[1,4]]})", oct);
  CHECK(eq.edge_mask().count() == 4);
  // Dropping an endpoint breaks closure.
  CHECK_THROWS_AS(parse_subcomplex_text(R"({"edges":[[1,2]],"vertices":[1]})", oct),
                  Error);
  // Simplices outside the parent are unknown.
  CHECK_THROWS_AS(parse_subcomplex_text(R"({"vertices":[77]})", oct), Error);
}

TEST_CASE("machine reports carry the schema version and stable numbers") {
  Generated g = generate("octahedron", {});
  CurvatureReport r = check_link_condition(g.complex, g.metric);
  std::string machine = emit_curvature(r, "unit-default", Format::Machine);
  CHECK(machine.find("\"schema_version\": 1") != std::string::npos);
  CHECK(machine.find("4.18879020478639") != std::string::npos);
  CHECK(machine.find("FAIL") != std::string::npos);
  std::string again = emit_curvature(r, "unit-default", Format::Machine);
  CHECK(machine == again);

  std::string human = emit_curvature(r, "unit-default", Format::Human);
  CHECK(human.find("NOT nonpositively curved") != std::string::npos);
}

TEST_CASE("infinite systoles are rendered as inf") {
  Generated g = generate("triangle", {});
  CurvatureReport r = check_link_condition(g.complex, g.metric);
  std::string machine = emit_curvature(r, "unit-default", Format::Machine);
  CHECK(machine.find("\"inf\"") != std::string::npos);
}

TEST_CASE("empty scan reports are CLEAN with zero pairs") {
  ScanReport empty;
  std::string machine = emit_scan(empty, Format::Machine);
  CHECK(machine.find("\"verdict\": \"CLEAN\"") != std::string::npos);
  CHECK(machine.find("\"pairs_tested\": 0") != std::string::npos);
}

TEST_CASE("collapse certificates serialize as replayable move lists") {
  Generated tri = generate("triangle", {});
  CollapseResult r = is_collapsible(tri.complex, 1000);
  REQUIRE(r.verdict == Verdict::Yes);
  std::string machine = emit_collapse(r, 1000, Format::Machine);
  CHECK(machine.find("triangle_collapse") != std::string::npos);
  CHECK(machine.find("\"terminal\"") != std::string::npos);
  std::string human = emit_collapse(r, 1000, Format::Human);
  CHECK(human.find("YES") != std::string::npos);
}

TEST_CASE("homology and validation reports") {
  auto oct = std::make_shared<const Complex2>(generate("octahedron", {}).complex);
  std::string h = emit_homology(homology(Subcomplex::full(oct)), Format::Machine);
  CHECK(h.find("\"betti\": [\n    1,\n    0,\n    1\n  ]") != std::string::npos);

  RawComplex raw;
  raw.vertices = {0, 1, 2};
  raw.triangles = {{0, 1, 2}};
  ValidationResult vr = validate(raw);
  std::string v = emit_validation(vr, Format::Machine);
  CHECK(v.find("\"ok\": false") != std::string::npos);
  CHECK(v.find("MissingFace") != std::string::npos);
}

TEST_CASE("format_double renders 15 significant digits") {
  CHECK(format_double(2 * 3.141592653589793) == "6.28318530717959");
  CHECK(format_double(std::numeric_limits<double>::infinity()) == "inf");
  CHECK(format_double(1e-9) == "1e-09");
}
