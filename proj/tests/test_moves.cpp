#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "npc2/group.hpp"
#include "npc2/harness.hpp"
#include "npc2/homology.hpp"
#include "npc2/moves.hpp"

using namespace npc2;

namespace {

HomologyResult full_homology(const Complex2& c) {
  auto ptr = std::make_shared<const Complex2>(c);
  return homology(Subcomplex::full(ptr));
}

}  // namespace

TEST_CASE("free pairs of the builtin complexes") {
  Generated tri = generate("triangle", {});
  std::vector<Move> pairs = free_pairs(tri.complex);
  CHECK(pairs.size() == 3);
  for (const Move& m : pairs) CHECK(m.kind == MoveKind::TriangleCollapse);

  Generated oct = generate("octahedron", {});
  CHECK(free_pairs(oct.complex).empty());

  Generated path = generate("path", {{"k", 2}});
  std::vector<Move> ends = free_pairs(path.complex);
  REQUIRE(ends.size() == 2);
  CHECK(ends[0].kind == MoveKind::EdgeCollapse);
  CHECK(ends[0].vertex == 0);
  CHECK(ends[1].vertex == 2);
}

TEST_CASE("collapsing a free pair of the filled triangle leaves a path") {
  Generated tri = generate("triangle", {});
  std::vector<Move> pairs = free_pairs(tri.complex);
  Complex2 after = apply_move(tri.complex, pairs[0]);
  CHECK(after.vertices().size() == 3);
  CHECK(after.edges().size() == 2);
  CHECK(after.triangles().empty());
}

TEST_CASE("triangle extension across two edges sharing a vertex") {
  Generated path = generate("path", {{"k", 2}});  // edges 01, 12
  Move ext = Move::triangle_extension({0, 1}, {1, 2});
  Complex2 after = apply_move(path.complex, ext);
  CHECK(after.triangles() == std::vector<Triangle>{{0, 1, 2}});
  CHECK(after.edge_index({0, 2}) >= 0);  // third edge added

  SUBCASE("re-extending the collapsed pair is the identity") {
    Move collapse = Move::triangle_collapse({0, 2}, {0, 1, 2});
    Complex2 back = apply_move(after, collapse);
    CHECK(back == path.complex);
    Complex2 again = apply_move(back, ext);
    CHECK(again == after);
  }
}

TEST_CASE("move preconditions are enforced") {
  Generated oct = generate("octahedron", {});
  SUBCASE("collapse on a closed surface is never free") {
    Move m = Move::triangle_collapse({1, 2}, {0, 1, 2});
    CHECK_THROWS_AS(apply_move(oct.complex, m), Error);
  }
  SUBCASE("gluing needs edges sharing exactly one vertex") {
    CHECK_THROWS_AS(apply_move(oct.complex, Move::triangle_extension({1, 2}, {3, 4})),
                    Error);
    CHECK_THROWS_AS(apply_move(oct.complex, Move::triangle_extension({1, 2}, {1, 2})),
                    Error);
  }
  SUBCASE("extension must create a new triangle") {
    CHECK_THROWS_AS(apply_move(oct.complex, Move::triangle_extension({0, 1}, {0, 2})),
                    Error);
  }
  SUBCASE("edge extension needs a fresh vertex id") {
    CHECK_THROWS_AS(apply_move(oct.complex, Move::edge_extension(0, 3)), Error);
    Complex2 grown = apply_move(oct.complex, Move::edge_extension(0, 99));
    CHECK(grown.has_vertex(99));
    CHECK(grown.edge_index({0, 99}) >= 0);
  }
  SUBCASE("edge collapse needs a free vertex") {
    Generated tri = generate("triangle", {});
    CHECK_THROWS_AS(apply_move(tri.complex, Move::edge_collapse(0, {0, 1})), Error);
  }
}

TEST_CASE("moves preserve homology and triviality verdicts") {
  std::mt19937 rng(5150);
  Budgets budgets;
  std::vector<Generated> seeds = {generate("disk_grid", {{"n", 3}}),
                                  generate("cone", {{"k", 5}}),
                                  generate("triangle", {})};
  for (const Generated& g : seeds) {
    Complex2 cur = g.complex;
    for (int step = 0; step < 6; ++step) {
      std::vector<Move> pairs = free_pairs(cur);
      if (pairs.empty()) break;
      std::uniform_int_distribution<std::size_t> pick(0, pairs.size() - 1);
      Complex2 next = apply_move(cur, pairs[pick(rng)]);

      HomologyResult before = full_homology(cur);
      HomologyResult after = full_homology(next);
      CHECK(before.betti == after.betti);
      CHECK(before.torsion_h1 == after.torsion_h1);

      auto cp = std::make_shared<const Complex2>(cur);
      auto np = std::make_shared<const Complex2>(next);
      TriVerdict tv_before =
          is_trivial_group(fundamental_group(Subcomplex::full(cp), 0), budgets);
      TriVerdict tv_after =
          is_trivial_group(fundamental_group(Subcomplex::full(np), 0), budgets);
      if (tv_before.value != Verdict::Unknown && tv_after.value != Verdict::Unknown)
        CHECK(tv_before.value == tv_after.value);
      cur = next;
    }
  }
}

TEST_CASE("collapsibility search on the builtins") {
  SUBCASE("a filled triangle collapses in three moves") {
    Generated tri = generate("triangle", {});
    CollapseResult r = is_collapsible(tri.complex, 1000000);
    REQUIRE(r.verdict == Verdict::Yes);
    CHECK(r.certificate->moves.size() == 3);
    CHECK(verify_certificate(tri.complex, *r.certificate).ok);
  }
  SUBCASE("the octahedron has no free pair and is NO immediately") {
    Generated oct = generate("octahedron", {});
    CollapseResult r = is_collapsible(oct.complex, 1000000);
    CHECK(r.verdict == Verdict::No);
    CHECK(r.visited <= 2);
  }
  SUBCASE("grid disks collapse") {
    for (long n : {1L, 2L, 3L}) {
      Generated disk = generate("disk_grid", {{"n", n}});
      CollapseResult r = is_collapsible(disk.complex, 1000000);
      REQUIRE(r.verdict == Verdict::Yes);
      CHECK(verify_certificate(disk.complex, *r.certificate).ok);
    }
  }
  SUBCASE("every YES certificate over the builtins verifies") {
    std::vector<Generated> cases = {
        generate("triangle", {}),     generate("cone", {{"k", 4}}),
        generate("cone", {{"k", 6}}), generate("path", {{"k", 1}}),
        generate("path", {{"k", 5}}), generate("disk_grid", {{"n", 2}})};
    for (const Generated& g : cases) {
      CollapseResult r = is_collapsible(g.complex, 1000000);
      REQUIRE(r.verdict == Verdict::Yes);
      CHECK(verify_certificate(g.complex, *r.certificate).ok);
    }
  }
  SUBCASE("budget exhaustion reports UNKNOWN") {
    Generated disk = generate("disk_grid", {{"n", 3}});
    CollapseResult r = is_collapsible(disk.complex, 2);
    CHECK(r.verdict == Verdict::Unknown);
  }
  SUBCASE("the torus does not collapse") {
    Generated torus = generate("torus_grid", {{"n", 3}});
    CollapseResult r = is_collapsible(torus.complex, 1000000);
    CHECK(r.verdict == Verdict::No);
  }
  SUBCASE("collapsible implies contractible invariants") {
    Budgets budgets;
    for (long n : {2L, 3L}) {
      Generated disk = generate("disk_grid", {{"n", n}});
      CollapseResult r = is_collapsible(disk.complex, 1000000);
      REQUIRE(r.verdict == Verdict::Yes);
      HomologyResult h = full_homology(disk.complex);
      CHECK(h.betti == std::array<long, 3>{1, 0, 0});
      auto ptr = std::make_shared<const Complex2>(disk.complex);
      TriVerdict tv =
          is_trivial_group(fundamental_group(Subcomplex::full(ptr), 0), budgets);
      CHECK(tv.value != Verdict::No);
    }
  }
}

TEST_CASE("certificate verification catches bad replays") {
  Generated tri = generate("triangle", {});
  CollapseResult r = is_collapsible(tri.complex, 1000000);
  REQUIRE(r.verdict == Verdict::Yes);

  SUBCASE("valid certificate passes") {
    CHECK(verify_certificate(tri.complex, *r.certificate).ok);
  }
  SUBCASE("illegally reordered moves fail at the first bad move") {
    CollapseCertificate reordered = *r.certificate;
    std::swap(reordered.moves[0], reordered.moves[2]);
    CertificateCheck check = verify_certificate(tri.complex, reordered);
    CHECK(!check.ok);
    CHECK(check.failed_move == 0);
  }
  SUBCASE("certificate replayed against the wrong complex fails") {
    Generated oct = generate("octahedron", {});
    CHECK(!verify_certificate(oct.complex, *r.certificate).ok);
  }
  SUBCASE("wrong terminal vertex fails") {
    CollapseCertificate wrong = *r.certificate;
    wrong.terminal += 1;
    CHECK(!verify_certificate(tri.complex, wrong).ok);
  }
}
