#include "npc2/folding.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

namespace npc2 {

long FoldedGraph::arc_count() const {
  long n = 0;
  for (const auto& slots : out)
    n += std::count_if(slots.begin(), slots.end(), [](int t) { return t >= 0; });
  return n;
}

namespace {

struct FoldBuilder {
  int ngens;
  std::vector<int> dsu;
  // Incident arc stubs per node: slot = 2*gen for outgoing, 2*gen+1 for
  // incoming; target is the node at the other end.
  std::vector<std::vector<std::pair<int, int>>> stubs;
  std::deque<int> dirty;

  explicit FoldBuilder(int gens) : ngens(gens) { add_node(); }

  int add_node() {
    dsu.push_back(int(dsu.size()));
    stubs.emplace_back();
    return int(dsu.size()) - 1;
  }

  int find(int x) {
    while (dsu[x] != x) x = dsu[x] = dsu[dsu[x]];
    return x;
  }

  void add_arc(int from, int to, int gen) {
    stubs[from].push_back({2 * gen, to});
    stubs[to].push_back({2 * gen + 1, from});
    dirty.push_back(from);
    dirty.push_back(to);
  }

  void merge(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (stubs[a].size() < stubs[b].size()) std::swap(a, b);
    dsu[b] = a;
    stubs[a].insert(stubs[a].end(), stubs[b].begin(), stubs[b].end());
    stubs[b].clear();
    dirty.push_back(a);
  }

  // Folds until no node has two same-label arcs in the same direction
  // toward different targets.
  void fold() {
    while (!dirty.empty()) {
      int u = find(dirty.front());
      dirty.pop_front();
      // Compact stubs to representatives and drop duplicates.
      std::vector<std::pair<int, int>> compact;
      bool merged = false;
      for (auto [slot, target] : stubs[u]) {
        int t = find(target);
        bool dup = false;
        for (auto& [s2, t2] : compact)
          if (s2 == slot) {
            if (t2 == t) {
              dup = true;  // literally the same arc seen from a merged node
            } else {
              merge(t2, t);
              merged = true;
            }
            break;
          }
        if (merged) break;
        if (!dup) compact.push_back({slot, t});
      }
      if (merged) {
        dirty.push_back(u);  // re-examine after the merge settles
        continue;
      }
      stubs[u] = std::move(compact);
    }
  }
};

}  // namespace

FoldedGraph stallings_fold(int generator_count,
                           const std::vector<Word>& subgroup_words) {
  FoldBuilder builder(generator_count);
  for (const Word& raw : subgroup_words) {
    Word w = reduce_word(raw);
    if (w.empty()) continue;
    int prev = 0;
    for (std::size_t i = 0; i < w.size(); ++i) {
      int next = i + 1 == w.size() ? 0 : builder.add_node();
      int letter = w[i];
      if (letter > 0)
        builder.add_arc(prev, next, letter - 1);
      else
        builder.add_arc(next, prev, -letter - 1);
      prev = next;
    }
  }
  builder.fold();

  // Renumber live nodes by BFS from the basepoint, following labels in order.
  int base = builder.find(0);
  std::vector<int> number(builder.dsu.size(), -1);
  std::vector<int> order{base};
  number[base] = 0;
  for (std::size_t head = 0; head < order.size(); ++head) {
    int u = order[head];
    std::vector<std::pair<int, int>> slots = builder.stubs[u];
    std::sort(slots.begin(), slots.end());
    for (auto [slot, target] : slots) {
      int t = builder.find(target);
      if (number[t] < 0) {
        number[t] = int(order.size());
        order.push_back(t);
      }
    }
  }

  FoldedGraph g;
  g.generator_count = generator_count;
  g.out.assign(order.size(), std::vector<int>(generator_count, -1));
  g.in.assign(order.size(), std::vector<int>(generator_count, -1));
  for (std::size_t i = 0; i < order.size(); ++i)
    for (auto [slot, target] : builder.stubs[order[i]]) {
      int t = number[builder.find(target)];
      if (slot % 2 == 0)
        g.out[i][slot / 2] = t;
      else
        g.in[i][slot / 2] = t;
    }
  return g;
}

bool membership(const FoldedGraph& g, const Word& w) {
  Word reduced = reduce_word(w);
  int node = 0;
  for (int letter : reduced) {
    node = letter > 0 ? g.out[node][letter - 1] : g.in[node][-letter - 1];
    if (node < 0) return false;
  }
  return node == 0;
}

}  // namespace npc2
