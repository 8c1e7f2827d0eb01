// Words over free generators, spanning-tree presentations of fundamental
// groups, Tietze simplification, abelian invariants and budgeted group
// triviality decisions.
#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "npc2/complex.hpp"
#include "npc2/snf.hpp"
#include "npc2/verdict.hpp"

namespace npc2 {

/// A word is a sequence of letters +-(k+1), the sign giving the exponent of
/// generator k.
using Word = std::vector<int>;

Word reduce_word(Word w);
Word inverse_word(const Word& w);
/// Letters a..z with inverses A..Z; falls back to x3.x7'-style names past 26.
std::string word_to_string(const Word& w);

/// How a presentation's generators arose from a spanning tree, with enough
/// data to turn words back into closed vertex paths and vice versa.
struct SpanningTreeOrigin {
  int basepoint = -1;
  std::vector<Edge> generator_edges;   // canonical order; min->max is positive
  std::map<int, int> parent_vertex;    // BFS tree; basepoint maps to itself
  std::map<Edge, int> edge_letters;    // letter for min->max traversal; 0 = tree
};

struct GroupPresentation {
  int generator_count = 0;
  std::vector<Word> relators;  // freely reduced, nonempty
  std::optional<SpanningTreeOrigin> origin;
};

/// Spanning-tree presentation of pi1 of one component: a generator per
/// non-tree edge, a relator per triangle (its boundary word). Deterministic:
/// basepoint is the minimal vertex id, the tree comes from a BFS that visits
/// neighbors in ascending order.
GroupPresentation fundamental_group(const Subcomplex& s,
                                    std::size_t component_index);
std::vector<GroupPresentation> fundamental_groups(const Subcomplex& s);

/// Closed vertex path at the basepoint realizing one generator (tree path,
/// the edge, tree path back).
std::vector<int> generator_loop(const GroupPresentation& p, int gen);
/// Closed vertex path realizing a whole word.
std::vector<int> word_loop(const GroupPresentation& p, const Word& w);
/// Rewrites a closed vertex path as a word in another presentation's
/// generators (every traversed edge must carry a letter there).
Word loop_word(const GroupPresentation& p, const std::vector<int>& loop);

struct AbelianInvariants {
  long free_rank = 0;
  std::vector<Integer> torsion;  // invariant factors > 1
  bool trivial() const { return free_rank == 0 && torsion.empty(); }
  std::string to_string() const;
};

/// Exponent-sum matrix of the relators (generators x relators).
IntMatrix abelianized_relators(const GroupPresentation& p);
AbelianInvariants abelian_invariants(const GroupPresentation& p);

std::vector<Integer> abelianize_word(const Word& w, int generator_count);
/// Class of vec in coker(relmat) is zero / has infinite order.
bool zero_in_cokernel(const IntMatrix& relmat, const std::vector<Integer>& vec);
bool infinite_order_in_cokernel(const IntMatrix& relmat,
                                const std::vector<Integer>& vec);

struct TietzeResult {
  GroupPresentation presentation;  // origin dropped: generators are renamed
  std::uint64_t moves_used = 0;
  bool exhausted = false;
};

/// Free/cyclic reduction, duplicate removal, subword substitution and
/// elimination of length-<=1 relators, applied until stable or the move
/// budget runs out. The result presents an isomorphic group.
TietzeResult tietze_simplify(const GroupPresentation& p, std::uint64_t max_moves);

/// NO via nontrivial abelianization; YES via simplification to the empty
/// presentation or coset enumeration closing at index 1; NO also when the
/// enumeration closes at index > 1. UNKNOWN on budget exhaustion.
TriVerdict is_trivial_group(const GroupPresentation& p, const Budgets& budgets);

}  // namespace npc2
