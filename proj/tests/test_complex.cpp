#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "npc2/complex.hpp"
#include "npc2/harness.hpp"
#include "support/oracles.hpp"

using namespace npc2;

namespace {

std::shared_ptr<const Complex2> octahedron() {
  return std::make_shared<const Complex2>(generate("octahedron", {}).complex);
}

}  // namespace

TEST_CASE("validate accepts a closed 2-simplex") {
  RawComplex raw;
  raw.vertices = {0, 1, 2};
  raw.edges = {{0, 1}, {1, 2}, {0, 2}};
  raw.triangles = {{0, 1, 2}};
  ValidationResult vr = validate(raw);
  REQUIRE(vr.ok());
  CHECK(vr.complex->vertices().size() == 3);
  CHECK(vr.complex->edges().size() == 3);
  CHECK(vr.complex->triangles().size() == 1);
}

TEST_CASE("validate reports a missing triangle face") {
  RawComplex raw;
  raw.vertices = {0, 1, 2};
  raw.edges = {{0, 1}, {1, 2}};  // 0-2 absent
  raw.triangles = {{0, 1, 2}};
  ValidationResult vr = validate(raw);
  REQUIRE(!vr.ok());
  bool found = false;
  for (const Diagnostic& d : vr.diagnostics)
    if (d.code == ErrorCode::MissingFace && d.detail.find("0-2") != std::string::npos)
      found = true;
  CHECK(found);
}

TEST_CASE("validate reports degenerate and duplicate simplices") {
  RawComplex raw;
  raw.vertices = {3, 3};
  raw.edges = {{3, 3}};
  ValidationResult vr = validate(raw);
  REQUIRE(!vr.ok());
  bool degenerate = false, duplicate = false;
  for (const Diagnostic& d : vr.diagnostics) {
    if (d.code == ErrorCode::DegenerateSimplex) degenerate = true;
    if (d.code == ErrorCode::DuplicateSimplex) duplicate = true;
  }
  CHECK(degenerate);
  CHECK(duplicate);
}

TEST_CASE("closure of a triangle pulls in all faces") {
  auto oct = octahedron();
  SimplexSet seeds;
  seeds.triangles.push_back({0, 1, 2});
  Subcomplex s = closure(oct, seeds);
  CHECK(s.vertex_mask().count() == 3);
  CHECK(s.edge_mask().count() == 3);
  CHECK(s.triangle_mask().count() == 1);

  SUBCASE("closure is idempotent") {
    Subcomplex again = closure(oct, s.simplex_set());
    CHECK(again == s);
  }
}

TEST_CASE("closure of the empty seed set is empty") {
  auto oct = octahedron();
  Subcomplex s = closure(oct, {});
  CHECK(s.is_empty());
  CHECK(s.size() == 0);
}

TEST_CASE("closure of an edge and a far vertex") {
  auto oct = octahedron();
  SimplexSet seeds;
  seeds.edges.push_back({0, 1});
  seeds.vertices.push_back(5);
  Subcomplex s = closure(oct, seeds);
  CHECK(s.vertex_ids() == std::vector<int>{0, 1, 5});
  CHECK(s.edge_list() == std::vector<Edge>{{0, 1}});
  CHECK(s.triangle_list().empty());
}

TEST_CASE("closure rejects unknown simplices") {
  auto oct = octahedron();
  SimplexSet seeds;
  seeds.vertices.push_back(9);
  CHECK_THROWS_AS(closure(oct, seeds), Error);
}

TEST_CASE("hemisphere intersection is the equatorial 4-cycle") {
  auto oct = octahedron();
  SimplexSet upper_seeds, lower_seeds;
  for (const Triangle& t : oct->triangles())
    (t[0] == 0 ? upper_seeds : lower_seeds).triangles.push_back(t);
  Subcomplex upper = closure(oct, upper_seeds);
  Subcomplex lower = closure(oct, lower_seeds);
  Subcomplex equator = intersect(upper, lower);
  CHECK(equator.vertex_ids() == std::vector<int>{1, 2, 3, 4});
  CHECK(equator.edge_list() ==
        std::vector<Edge>{{1, 2}, {1, 4}, {2, 3}, {3, 4}});
  CHECK(equator.triangle_list().empty());
  CHECK(unite(upper, lower) == Subcomplex::full(oct));
}

TEST_CASE("intersection is idempotent and disjoint pieces meet empty") {
  auto oct = octahedron();
  SimplexSet a_seed, b_seed;
  a_seed.triangles.push_back({0, 1, 2});
  b_seed.triangles.push_back({3, 4, 5});
  Subcomplex a = closure(oct, a_seed);
  Subcomplex b = closure(oct, b_seed);
  CHECK(intersect(a, a) == a);
  CHECK(intersect(a, b).is_empty());
}

TEST_CASE("set operations demand the same parent") {
  auto oct = octahedron();
  auto tri = std::make_shared<const Complex2>(generate("triangle", {}).complex);
  CHECK_THROWS_AS(intersect(Subcomplex::full(oct), Subcomplex::full(tri)), Error);
}

TEST_CASE("star and combinatorial link at an octahedron vertex") {
  auto oct = octahedron();
  auto [star, link] = star_and_link(oct, 0);
  CHECK(star.vertex_mask().count() == 5);
  CHECK(star.edge_mask().count() == 8);
  CHECK(star.triangle_mask().count() == 4);
  CHECK(link.node_edges.size() == 4);
  CHECK(link.arcs.size() == 4);
  // Each node meets exactly two arcs: a 4-cycle.
  std::vector<int> degree(4, 0);
  for (const auto& arc : link.arcs) {
    ++degree[arc[0]];
    ++degree[arc[1]];
  }
  for (int d : degree) CHECK(d == 2);
}

TEST_CASE("link of a cone apex is the base cycle") {
  auto cone = std::make_shared<const Complex2>(generate("cone", {{"k", 4}}).complex);
  auto [star, link] = star_and_link(cone, 0);
  CHECK(link.node_edges.size() == 4);
  CHECK(link.arcs.size() == 4);
  CHECK(star == Subcomplex::full(cone));
}

TEST_CASE("link of an isolated vertex is empty") {
  Complex2 c = Complex2::from_parts({7}, {}, {});
  auto ptr = std::make_shared<const Complex2>(c);
  auto [star, link] = star_and_link(ptr, 7);
  CHECK(link.node_edges.empty());
  CHECK(link.arcs.empty());
  CHECK(star.size() == 1);
}

TEST_CASE("connected components with deterministic basepoints") {
  Complex2 c = Complex2::from_parts({0, 1, 2, 3, 4}, {{0, 1}, {2, 3}}, {});
  auto ptr = std::make_shared<const Complex2>(c);
  ComponentDecomposition d = connected_components(Subcomplex::full(ptr));
  REQUIRE(d.count() == 3);
  CHECK(d.basepoints == std::vector<int>{0, 2, 4});

  SUBCASE("empty subcomplex has no components") {
    CHECK(connected_components(Subcomplex::empty_of(ptr)).count() == 0);
  }
}

TEST_CASE("component count is invariant under relabeling") {
  std::mt19937 rng(20240811);
  for (int trial = 0; trial < 30; ++trial) {
    Complex2 g = npc2::testing::random_graph_complex(rng, 8, 10);
    auto ptr = std::make_shared<const Complex2>(g);
    std::size_t base = connected_components(Subcomplex::full(ptr)).count();

    std::vector<int> perm(g.vertices().size());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    RawComplex raw;
    for (std::size_t i = 0; i < g.vertices().size(); ++i)
      raw.vertices.push_back(perm[i] + 100);
    for (const Edge& e : g.edges())
      raw.edges.push_back({perm[g.vertex_index(e[0])] + 100,
                           perm[g.vertex_index(e[1])] + 100});
    ValidationResult vr = validate(raw);
    REQUIRE(vr.ok());
    auto relabeled = std::make_shared<const Complex2>(*vr.complex);
    CHECK(connected_components(Subcomplex::full(relabeled)).count() == base);
  }
}

TEST_CASE("combinatorial balls grow with the radius and match BFS") {
  auto oct = octahedron();
  CHECK(combinatorial_ball(oct, 3, 0).size() == 1);
  Subcomplex ball1 = combinatorial_ball(oct, 0, 1);
  CHECK(ball1.vertex_mask().count() == 5);
  CHECK(ball1.edge_mask().count() == 8);
  CHECK(ball1.triangle_mask().count() == 4);
  CHECK(combinatorial_ball(oct, 0, 2) == Subcomplex::full(oct));
  CHECK(combinatorial_ball(oct, 0, 17) == Subcomplex::full(oct));

  SUBCASE("r=1 ball equals the BFS distance oracle") {
    std::vector<int> dist = npc2::testing::bfs_distances(*oct, 0);
    for (int v : oct->vertices()) {
      bool in_ball = ball1.vertex_mask().test(oct->vertex_index(v));
      CHECK(in_ball == (dist[oct->vertex_index(v)] <= 1));
    }
  }

  SUBCASE("nested radii on random graphs, stabilizing at the component") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
      Complex2 g = npc2::testing::random_graph_complex(rng, 8, 9);
      auto ptr = std::make_shared<const Complex2>(g);
      int v = g.vertices()[0];
      for (int r = 0; r < 4; ++r)
        CHECK(combinatorial_ball(ptr, v, r + 1).contains(combinatorial_ball(ptr, v, r)));
      ComponentDecomposition comps = connected_components(Subcomplex::full(ptr));
      Subcomplex big = combinatorial_ball(ptr, v, int(g.vertices().size()));
      CHECK(big == comps.components[0]);
    }
  }
}

TEST_CASE("subcomplex masks must be face-closed") {
  auto oct = octahedron();
  BitMask v(oct->vertices().size()), e(oct->edges().size()), t(oct->triangles().size());
  e.set(0);  // edge without endpoints
  CHECK_THROWS_AS(Subcomplex(oct, v, e, t), Error);
}

TEST_CASE("lattice laws for intersection and union on random subcomplexes") {
  auto oct = octahedron();
  std::vector<Subcomplex> subs = list_subcomplexes(oct, 7, SubcomplexFilter::All);
  std::mt19937 rng(99);
  std::uniform_int_distribution<std::size_t> pick(0, subs.size() - 1);
  for (int trial = 0; trial < 50; ++trial) {
    const Subcomplex& a = subs[pick(rng)];
    const Subcomplex& b = subs[pick(rng)];
    const Subcomplex& c = subs[pick(rng)];
    CHECK(intersect(a, b) == intersect(b, a));
    CHECK(unite(a, b) == unite(b, a));
    CHECK(intersect(a, unite(a, b)) == a);
    CHECK(unite(a, intersect(a, b)) == a);
    CHECK(intersect(intersect(a, b), c) == intersect(a, intersect(b, c)));
    CHECK(unite(unite(a, b), c) == unite(a, unite(b, c)));
  }
}
