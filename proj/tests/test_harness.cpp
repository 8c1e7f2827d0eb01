#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "npc2/harness.hpp"
#include "npc2/homology.hpp"
#include "support/oracles.hpp"

using namespace npc2;

TEST_CASE("builtin generators produce the documented complexes") {
  Generated oct = generate("octahedron", {});
  CHECK(oct.complex.vertices().size() == 6);
  CHECK(oct.complex.edges().size() == 12);
  CHECK(oct.complex.triangles().size() == 8);

  Generated disk = generate("disk_grid", {{"n", 3}});
  CHECK(disk.complex.vertices().size() == 9);
  CHECK(disk.complex.triangles().size() == 8);
  auto dptr = std::make_shared<const Complex2>(disk.complex);
  CHECK(homology(Subcomplex::full(dptr)).betti == std::array<long, 3>{1, 0, 0});

  Generated torus = generate("torus_grid", {{"n", 3}});
  auto tptr = std::make_shared<const Complex2>(torus.complex);
  CHECK(homology(Subcomplex::full(tptr)).betti == std::array<long, 3>{1, 2, 1});

  Generated cone = generate("cone", {{"k", 4}});
  CHECK(cone.complex.vertices().size() == 5);
  CHECK(cone.complex.triangles().size() == 4);

  Generated path = generate("path", {{"k", 3}});
  CHECK(path.complex.vertices().size() == 4);
  CHECK(path.complex.edges().size() == 3);

  CHECK(generate("disk_grid", {{"n", 1}}).complex.size() == 1);
  CHECK_THROWS_AS(generate("klein_bottle", {}), Error);
  CHECK_THROWS_AS(generate("torus_grid", {{"n", 2}}), Error);
  CHECK_THROWS_AS(generate("cone", {{"k", 2}}), Error);
}

TEST_CASE("generators are deterministic") {
  Generated a = generate("disk_grid", {{"n", 3}});
  Generated b = generate("disk_grid", {{"n", 3}});
  CHECK(a.complex == b.complex);
}

TEST_CASE("subcomplex enumeration of a single triangle") {
  auto tri = std::make_shared<const Complex2>(generate("triangle", {}).complex);
  std::vector<Subcomplex> all =
      list_subcomplexes(tri, std::numeric_limits<std::size_t>::max(),
                        SubcomplexFilter::All);
  CHECK(all.size() == 18);
  CHECK(long(all.size()) == npc2::testing::brute_force_subcomplex_count(*tri));

  SUBCASE("no duplicates") {
    for (std::size_t i = 0; i < all.size(); ++i)
      for (std::size_t j = i + 1; j < all.size(); ++j) CHECK(!(all[i] == all[j]));
  }
  SUBCASE("cap zero yields nothing") {
    CHECK(list_subcomplexes(tri, 0, SubcomplexFilter::All).empty());
  }
  SUBCASE("size caps are respected") {
    for (const Subcomplex& s : list_subcomplexes(tri, 3, SubcomplexFilter::All))
      CHECK(s.size() <= 3);
  }
}

TEST_CASE("enumeration counts match brute force on random graphs") {
  std::mt19937 rng(2718);
  for (int trial = 0; trial < 20; ++trial) {
    Complex2 g = npc2::testing::random_graph_complex(rng, 5, 6);
    auto ptr = std::make_shared<const Complex2>(g);
    std::vector<Subcomplex> all =
        list_subcomplexes(ptr, std::numeric_limits<std::size_t>::max(),
                          SubcomplexFilter::All);
    CHECK(long(all.size()) == npc2::testing::brute_force_subcomplex_count(g));
  }
}

TEST_CASE("connected filter on two disjoint edges") {
  Complex2 c = Complex2::from_parts({0, 1, 2, 3}, {{0, 1}, {2, 3}}, {});
  auto ptr = std::make_shared<const Complex2>(c);
  std::vector<Subcomplex> connected = list_subcomplexes(
      ptr, std::numeric_limits<std::size_t>::max(), SubcomplexFilter::Connected);
  // Four singletons and the two single edges.
  CHECK(connected.size() == 6);
  for (const Subcomplex& s : connected) CHECK(is_connected(s));
}

TEST_CASE("octahedron hemisphere pair produces the equator violation") {
  auto oct = std::make_shared<const Complex2>(generate("octahedron", {}).complex);
  SimplexSet up, down;
  for (const Triangle& t : oct->triangles())
    (t[0] == 0 ? up : down).triangles.push_back(t);
  Subcomplex upper = closure(oct, up);
  Subcomplex lower = closure(oct, down);
  ScanConfig cfg;
  ScanReport r = scan_pair(upper, lower, cfg);
  CHECK(r.verdict == ScanOutcome::Violation);
  REQUIRE(r.violations.size() == 1);
  CHECK(r.unknowns.empty());
  CHECK(r.violations_verified);
  std::set<int> loop(r.violations[0].component.witness_loop.begin(),
                     r.violations[0].component.witness_loop.end());
  CHECK(loop == std::set<int>{1, 2, 3, 4});
}

TEST_CASE("full scan of a single filled triangle is clean") {
  auto tri = std::make_shared<const Complex2>(generate("triangle", {}).complex);
  ScanConfig cfg;
  ScanReport r = strong_injectivity_scan(tri, cfg);
  CHECK(r.verdict == ScanOutcome::Clean);
  CHECK(r.pairs_tested > 0);
  CHECK(r.unknowns.empty());
  CHECK(r.y_skipped_pi1_unknown == 0);
  CHECK(!r.y_enumeration_truncated);
}

TEST_CASE("scans of 1-dimensional complexes are always clean") {
  std::mt19937 rng(31337);
  for (int trial = 0; trial < 8; ++trial) {
    Complex2 g = npc2::testing::random_graph_complex(rng, 6, 7);
    auto ptr = std::make_shared<const Complex2>(g);
    ScanConfig cfg;
    cfg.require_y_pi1_injective = false;  // every subgraph qualifies (lemma)
    ScanReport r = strong_injectivity_scan(ptr, cfg);
    CHECK(r.verdict == ScanOutcome::Clean);
    CHECK(r.unknowns.empty());
  }
}

TEST_CASE("exhaustive scan of the 2x2 disk grid is clean") {
  auto disk = std::make_shared<const Complex2>(generate("disk_grid", {{"n", 2}}).complex);
  ScanConfig cfg;
  ScanReport r = strong_injectivity_scan(disk, cfg);
  CHECK(r.verdict == ScanOutcome::Clean);
  CHECK(r.violations.empty());
  CHECK(r.unknowns.empty());
  CHECK(r.y_skipped_pi1_unknown == 0);
  CHECK(!r.y_enumeration_truncated);
  CHECK(!r.z_enumeration_truncated);
}

TEST_CASE("scan results are independent of enumeration order and threads") {
  auto disk = std::make_shared<const Complex2>(generate("disk_grid", {{"n", 2}}).complex);
  ScanConfig one;
  one.threads = 1;
  ScanConfig four;
  four.threads = 4;
  ScanReport a = strong_injectivity_scan(disk, one);
  ScanReport b = strong_injectivity_scan(disk, four);
  CHECK(a.verdict == b.verdict);
  CHECK(a.pairs_tested == b.pairs_tested);
  CHECK(a.violations.size() == b.violations.size());
  CHECK(a.unknowns.size() == b.unknowns.size());
  CHECK(a.spent.cosets == b.spent.cosets);
  CHECK(a.spent.tietze_moves == b.spent.tietze_moves);
}

TEST_CASE("size caps are reported as truncation") {
  auto oct = std::make_shared<const Complex2>(generate("octahedron", {}).complex);
  ScanConfig cfg;
  cfg.max_y_size = 3;
  cfg.max_z_size = 3;
  ScanReport r = strong_injectivity_scan(oct, cfg);
  CHECK(r.y_enumeration_truncated);
  CHECK(r.z_enumeration_truncated);
}
