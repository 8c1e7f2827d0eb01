#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "npc2/coset.hpp"
#include "npc2/group.hpp"
#include "npc2/harness.hpp"

using namespace npc2;

namespace {

GroupPresentation presentation(int gens, std::vector<Word> relators) {
  GroupPresentation p;
  p.generator_count = gens;
  p.relators = std::move(relators);
  return p;
}

std::pair<AbelianInvariants, AbelianInvariants> ab_before_after(
    const GroupPresentation& p) {
  TietzeResult tz = tietze_simplify(p, 10000);
  return {abelian_invariants(p), abelian_invariants(tz.presentation)};
}

}  // namespace

TEST_CASE("word reduction and inversion") {
  CHECK(reduce_word({1, -1}) == Word{});
  CHECK(reduce_word({1, 2, -2, -1, 3}) == Word{3});
  CHECK(inverse_word({1, 2}) == Word{-2, -1});
  CHECK(word_to_string({1, 2, -1, -2}) == "abAB");
  CHECK(word_to_string({}) == "1");
}

TEST_CASE("fundamental group of a filled triangle") {
  auto tri = std::make_shared<const Complex2>(generate("triangle", {}).complex);
  GroupPresentation p = fundamental_group(Subcomplex::full(tri), 0);
  // Spanning-tree presentation <a | a>: one non-tree edge, one relator.
  CHECK(p.generator_count == 1);
  REQUIRE(p.relators.size() == 1);
  CHECK(reduce_word(p.relators[0]).size() == 1);
  CHECK(abelian_invariants(p).trivial());
  TietzeResult tz = tietze_simplify(p, 1000);
  CHECK(tz.presentation.generator_count == 0);
  CHECK(tz.presentation.relators.empty());
}

TEST_CASE("fundamental group of a 4-cycle is Z") {
  Complex2 cycle = Complex2::from_parts({0, 1, 2, 3},
                                        {{0, 1}, {0, 3}, {1, 2}, {2, 3}}, {});
  auto ptr = std::make_shared<const Complex2>(cycle);
  GroupPresentation p = fundamental_group(Subcomplex::full(ptr), 0);
  CHECK(p.generator_count == 1);
  CHECK(p.relators.empty());
  AbelianInvariants inv = abelian_invariants(p);
  CHECK(inv.free_rank == 1);
  CHECK(inv.torsion.empty());

  SUBCASE("the generator loop walks the cycle") {
    std::vector<int> loop = generator_loop(p, 0);
    CHECK(loop.front() == 0);
    CHECK(loop.back() == 0);
    CHECK(loop.size() == 5);
  }
}

TEST_CASE("fundamental group of the flat torus abelianizes to Z^2") {
  auto torus = std::make_shared<const Complex2>(generate("torus_grid", {{"n", 3}}).complex);
  GroupPresentation p = fundamental_group(Subcomplex::full(torus), 0);
  CHECK(p.relators.size() == 18);
  AbelianInvariants inv = abelian_invariants(p);
  CHECK(inv.free_rank == 2);
  CHECK(inv.torsion.empty());
}

TEST_CASE("presentation basepoints and determinism") {
  Complex2 two = Complex2::from_parts({0, 1, 2, 3}, {{0, 1}, {2, 3}}, {});
  auto ptr = std::make_shared<const Complex2>(two);
  std::vector<GroupPresentation> ps = fundamental_groups(Subcomplex::full(ptr));
  REQUIRE(ps.size() == 2);
  CHECK(ps[0].origin->basepoint == 0);
  CHECK(ps[1].origin->basepoint == 2);
  CHECK_THROWS_AS(fundamental_group(Subcomplex::full(ptr), 5), Error);
}

TEST_CASE("loop and word round trips") {
  auto oct = std::make_shared<const Complex2>(generate("octahedron", {}).complex);
  SimplexSet eq;
  eq.edges = {{1, 2}, {2, 3}, {3, 4}, {1, 4}};
  Subcomplex equator = closure(oct, eq);
  GroupPresentation p = fundamental_group(equator, 0);
  REQUIRE(p.generator_count == 1);
  std::vector<int> loop = word_loop(p, {1});
  CHECK(loop.front() == p.origin->basepoint);
  CHECK(loop.back() == p.origin->basepoint);
  CHECK(loop_word(p, loop) == Word{1});
  CHECK(loop_word(p, word_loop(p, {-1})) == Word{-1});
}

TEST_CASE("tietze simplification examples") {
  SUBCASE("<a | a> collapses to the empty presentation") {
    TietzeResult tz = tietze_simplify(presentation(1, {{1}}), 100);
    CHECK(tz.presentation.generator_count == 0);
    CHECK(tz.presentation.relators.empty());
  }
  SUBCASE("<a, b | b> eliminates b and keeps the free factor") {
    TietzeResult tz = tietze_simplify(presentation(2, {{2}}), 100);
    CHECK(tz.presentation.generator_count == 1);
    CHECK(tz.presentation.relators.empty());
  }
  SUBCASE("free reduction and duplicate removal") {
    TietzeResult tz =
        tietze_simplify(presentation(2, {{1, -1}, {1, 2}, {-2, -1}}), 100);
    CHECK(tz.presentation.relators.size() == 1);
  }
  SUBCASE("budget exhaustion is reported") {
    TietzeResult tz = tietze_simplify(presentation(1, {{1}, {1}, {1}}), 1);
    CHECK(tz.exhausted);
  }
}

TEST_CASE("tietze simplification preserves abelian invariants") {
  std::vector<GroupPresentation> samples = {
      presentation(2, {{1, 2, -1, -2}}),               // Z^2
      presentation(2, {{1, 1, 1}, {2}}),               // Z/3
      presentation(3, {{1, 2}, {2, 3}}),               // Z
      presentation(2, {{1, 1, 2, 2}}),                 // Z + Z/2
      presentation(2, {{1, 2, 1, -2, -1, -2}}),        // trefoil group
  };
  for (const GroupPresentation& p : samples) {
    auto [before, after] = ab_before_after(p);
    CHECK(before.free_rank == after.free_rank);
    CHECK(before.torsion == after.torsion);
  }
}

TEST_CASE("coset enumeration on cyclic and free groups") {
  SUBCASE("<a | a^3> over the trivial subgroup has index 3") {
    CosetResult r = coset_enumeration(presentation(1, {{1, 1, 1}}), {}, 1000);
    REQUIRE(r.verdict == Verdict::Yes);
    CHECK(r.index == 3);
    CHECK(verify_coset_certificate(presentation(1, {{1, 1, 1}}), {}, r.table));
  }
  SUBCASE("<a | > over <a> has index 1") {
    CosetResult r = coset_enumeration(presentation(1, {}), {{1}}, 1000);
    REQUIRE(r.verdict == Verdict::Yes);
    CHECK(r.index == 1);
    CHECK(verify_coset_certificate(presentation(1, {}), {{1}}, r.table));
  }
  SUBCASE("free group of rank 2 exceeds any finite table") {
    CosetResult r = coset_enumeration(presentation(2, {}), {}, 100);
    CHECK(r.verdict == Verdict::Unknown);
  }
  SUBCASE("S3 from its Coxeter presentation") {
    GroupPresentation s3 =
        presentation(2, {{1, 1}, {2, 2}, {1, 2, 1, 2, 1, 2}});
    CosetResult r = coset_enumeration(s3, {}, 1000);
    REQUIRE(r.verdict == Verdict::Yes);
    CHECK(r.index == 6);
    CHECK(verify_coset_certificate(s3, {}, r.table));
  }
  SUBCASE("index of a subgroup: <a^2> in Z") {
    CosetResult r = coset_enumeration(presentation(1, {}), {{1, 1}}, 1000);
    REQUIRE(r.verdict == Verdict::Yes);
    CHECK(r.index == 2);
  }
}

TEST_CASE("certificate verification rejects tampered tables") {
  GroupPresentation p = presentation(1, {{1, 1, 1}});
  CosetResult r = coset_enumeration(p, {}, 1000);
  REQUIRE(r.verdict == Verdict::Yes);
  CosetTable bad = r.table;
  std::swap(bad.rows[0][0], bad.rows[1][0]);
  CHECK(!verify_coset_certificate(p, {}, bad));
}

TEST_CASE("triviality decisions with certificates") {
  Budgets budgets;
  SUBCASE("<a | a^3> is NO by abelianization") {
    TriVerdict v = is_trivial_group(presentation(1, {{1, 1, 1}}), budgets);
    CHECK(v.value == Verdict::No);
    CHECK(v.certificate == "abelianization");
    CHECK(v.witness_word == Word{1});
  }
  SUBCASE("<a | a> is YES") {
    TriVerdict v = is_trivial_group(presentation(1, {{1}}), budgets);
    CHECK(v.value == Verdict::Yes);
  }
  SUBCASE("the empty presentation is YES") {
    TriVerdict v = is_trivial_group(presentation(0, {}), budgets);
    CHECK(v.value == Verdict::Yes);
    CHECK(v.certificate == "empty-presentation");
  }
  SUBCASE("a perfect nontrivial group is NO via its regular representation") {
    // Binary icosahedral group: <a, b | (ab)^2 = a^3 = b^5>, order 120.
    GroupPresentation p = presentation(
        2, {{1, 2, 1, 2, -1, -1, -1}, {1, 1, 1, -2, -2, -2, -2, -2}});
    CHECK(abelian_invariants(p).trivial());
    TriVerdict v = is_trivial_group(p, budgets);
    CHECK(v.value == Verdict::No);
    CHECK(v.certificate == "coset-table");
  }
  SUBCASE("free groups are NO by abelianization") {
    TriVerdict v = is_trivial_group(presentation(2, {}), budgets);
    CHECK(v.value == Verdict::No);
    CHECK(v.certificate == "abelianization");
  }
  SUBCASE("a perfect group stays UNKNOWN under tiny budgets") {
    GroupPresentation p = presentation(
        2, {{1, 2, 1, 2, -1, -1, -1}, {1, 1, 1, -2, -2, -2, -2, -2}});
    Budgets tight;
    tight.tietze_moves = 5;
    tight.max_cosets = 10;
    TriVerdict v = is_trivial_group(p, tight);
    CHECK(v.value == Verdict::Unknown);
  }
  SUBCASE("verdicts refine monotonically with budget") {
    GroupPresentation p = presentation(1, {{1, 1, 1}});
    Budgets small;
    small.tietze_moves = 2;
    small.max_cosets = 2;
    TriVerdict lo = is_trivial_group(p, small);
    TriVerdict hi = is_trivial_group(p, budgets);
    if (lo.value != Verdict::Unknown) CHECK(lo.value == hi.value);
  }
}
