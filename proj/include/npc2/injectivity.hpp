// Three-valued decision of whether an inclusion of subcomplexes induces an
// injection on fundamental groups, component by component.
#pragma once

#include <string>
#include <vector>

#include "npc2/complex.hpp"
#include "npc2/group.hpp"
#include "npc2/verdict.hpp"

namespace npc2 {

/// Verdict for one connected component of the smaller subcomplex.
///
/// YES certificates: "identity" (component equals its ambient component),
/// "fold-rank" (free groups, folded image has full rank), "trivial-pi1"
/// (vacuous), "infinite-order-image" (a Z subgroup mapping to an
/// infinite-order homology class).
///
/// NO certificate: "kernel-witness" with a word nontrivial in the component
/// (by free reduction on a graph, or a nonzero abelianization image) whose
/// image is provably trivial in the ambient component.
struct ComponentVerdict {
  int basepoint = -1;
  TriVerdict verdict;
  Word witness_word;                  // in the component's presentation
  std::vector<int> witness_loop;      // closed vertex path at the basepoint
  std::string sub_nontrivial_by;      // "free-reduction" | "abelianization"
  std::string ambient_trivial_by;     // "tietze-empty" | "coset-index-1" | "coset-table"
};

struct InjectivityResult {
  std::vector<ComponentVerdict> components;
  Verdict aggregate() const;
  BudgetSpent total_spent() const;
};

/// Decides injectivity of pi1(component of sub) -> pi1(ambient component)
/// for every component of sub. Requires sub to be contained in ambient.
InjectivityResult induced_map_injectivity(const Subcomplex& sub,
                                          const Subcomplex& ambient,
                                          const Budgets& budgets);

/// Replays a NO verdict: re-certifies the witness as nontrivial in its
/// component of sub and trivial in its ambient component.
bool verify_violation(const Subcomplex& sub, const Subcomplex& ambient,
                      const ComponentVerdict& v, const Budgets& budgets);

}  // namespace npc2
