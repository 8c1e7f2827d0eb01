// Stallings foldings: canonical folded graphs for finitely generated
// subgroups of free groups, with exact membership testing.
#pragma once

#include <vector>

#include "npc2/group.hpp"

namespace npc2 {

/// Folded basepointed graph over a free basis: per node at most one outgoing
/// and one incoming arc per generator label. Node 0 is the basepoint.
struct FoldedGraph {
  int generator_count = 0;
  std::vector<std::vector<int>> out;  // [node][gen] -> node or -1
  std::vector<std::vector<int>> in;

  int node_count() const { return int(out.size()); }
  long arc_count() const;
  /// Rank of the represented subgroup (graph is connected by construction).
  long rank() const { return arc_count() - node_count() + 1; }
};

/// Wedge of the given words at the basepoint, folded to canonical form.
FoldedGraph stallings_fold(int generator_count,
                           const std::vector<Word>& subgroup_words);

/// w lies in the subgroup iff its free reduction traces a basepoint loop.
bool membership(const FoldedGraph& g, const Word& w);

}  // namespace npc2
