#include "npc2/coset.hpp"

#include <algorithm>
#include <deque>

namespace npc2 {

namespace {

constexpr int kUndef = -1;

inline int col_of(int letter) {
  return letter > 0 ? 2 * (letter - 1) : 2 * (-letter - 1) + 1;
}
inline int inv_col(int col) { return col ^ 1; }

// Working state for the enumeration. Cosets are merged by keeping a
// representative map p[] with p[k] <= k; a coset is live iff p[k] == k.
struct Enumerator {
  int ngens;
  std::uint64_t max_rows;
  std::vector<std::vector<int>> table;
  std::vector<int> p;
  std::deque<int> merge_queue;
  std::uint64_t defined = 0;
  bool overflow = false;

  explicit Enumerator(int gens, std::uint64_t max) : ngens(gens), max_rows(max) {
    new_coset();
  }

  int new_coset() {
    table.emplace_back(2 * ngens, kUndef);
    p.push_back(int(table.size()) - 1);
    ++defined;
    return int(table.size()) - 1;
  }

  int rep(int k) {
    int r = k;
    while (p[r] != r) r = p[r];
    while (p[k] != r) {
      int next = p[k];
      p[k] = r;
      k = next;
    }
    return r;
  }

  bool define(int alpha, int col) {
    if (std::uint64_t(table.size()) >= max_rows) {
      overflow = true;
      return false;
    }
    int beta = new_coset();
    table[alpha][col] = beta;
    table[beta][inv_col(col)] = alpha;
    return true;
  }

  void merge(int k, int l) {
    k = rep(k);
    l = rep(l);
    if (k == l) return;
    int mu = std::min(k, l), nu = std::max(k, l);
    p[nu] = mu;
    merge_queue.push_back(nu);
  }

  void coincidence(int alpha, int beta) {
    merge(alpha, beta);
    while (!merge_queue.empty()) {
      int gamma = merge_queue.front();
      merge_queue.pop_front();
      for (int col = 0; col < 2 * ngens; ++col) {
        int delta = table[gamma][col];
        if (delta == kUndef) continue;
        table[delta][inv_col(col)] = kUndef;
        int mu = rep(gamma), nu = rep(delta);
        if (table[mu][col] != kUndef)
          merge(nu, table[mu][col]);
        else if (table[nu][inv_col(col)] != kUndef)
          merge(mu, table[nu][inv_col(col)]);
        else {
          table[mu][col] = nu;
          table[nu][inv_col(col)] = mu;
        }
      }
    }
  }

  // Scans word w from coset alpha, filling gaps with new cosets (HLT).
  void scan_and_fill(int alpha, const Word& w) {
    if (w.empty()) return;
    int f = alpha, b = alpha;
    int i = 0, j = int(w.size()) - 1;
    while (true) {
      while (i <= j && table[f][col_of(w[i])] != kUndef) {
        f = table[f][col_of(w[i])];
        ++i;
      }
      if (i > j) {
        if (f != b) coincidence(f, b);
        return;
      }
      while (j >= i && table[b][inv_col(col_of(w[j]))] != kUndef) {
        b = table[b][inv_col(col_of(w[j]))];
        --j;
      }
      if (j < i) {
        coincidence(f, b);
        return;
      }
      if (j == i) {
        table[f][col_of(w[i])] = b;
        table[b][inv_col(col_of(w[i]))] = f;
        return;
      }
      if (!define(f, col_of(w[i]))) return;
    }
  }
};

}  // namespace

CosetResult coset_enumeration(const GroupPresentation& p,
                              const std::vector<Word>& subgroup_words,
                              std::uint64_t max_cosets) {
  if (max_cosets < 1)
    throw Error(ErrorCode::BadParams, "max_cosets must be at least 1");

  CosetResult result;
  Enumerator en(p.generator_count, max_cosets);

  std::vector<Word> relators;
  for (const Word& r : p.relators) {
    Word reduced = reduce_word(r);
    if (!reduced.empty()) relators.push_back(std::move(reduced));
  }

  for (const Word& w : subgroup_words) {
    en.scan_and_fill(0, reduce_word(w));
    if (en.overflow) break;
  }
  for (int alpha = 0; alpha < int(en.table.size()) && !en.overflow; ++alpha) {
    if (en.rep(alpha) != alpha) continue;
    for (const Word& r : relators) {
      en.scan_and_fill(alpha, r);
      if (en.overflow || en.rep(alpha) != alpha) break;
    }
    if (en.overflow || en.rep(alpha) != alpha) continue;
    for (int col = 0; col < 2 * p.generator_count && !en.overflow; ++col)
      if (en.table[alpha][col] == kUndef) en.define(alpha, col);
  }

  result.cosets_defined = en.defined;
  if (en.overflow) {
    result.verdict = Verdict::Unknown;
    return result;
  }

  // Standardize: renumber live cosets in BFS order from the subgroup coset.
  std::vector<int> number(en.table.size(), kUndef);
  std::vector<int> order;
  int root = en.rep(0);
  number[root] = 0;
  order.push_back(root);
  for (std::size_t head = 0; head < order.size(); ++head) {
    int c = order[head];
    for (int col = 0; col < 2 * p.generator_count; ++col) {
      int d = en.table[c][col];
      if (d == kUndef) continue;
      d = en.rep(d);
      if (number[d] == kUndef) {
        number[d] = int(order.size());
        order.push_back(d);
      }
    }
  }

  result.table.generator_count = p.generator_count;
  result.table.rows.assign(order.size(), std::vector<int>(2 * p.generator_count, kUndef));
  for (std::size_t i = 0; i < order.size(); ++i)
    for (int col = 0; col < 2 * p.generator_count; ++col) {
      int d = en.table[order[i]][col];
      if (d != kUndef) result.table.rows[i][col] = number[en.rep(d)];
    }

  result.verdict = Verdict::Yes;
  result.index = order.size();
  return result;
}

bool verify_coset_certificate(const GroupPresentation& p,
                              const std::vector<Word>& subgroup_words,
                              const CosetTable& table) {
  if (table.generator_count != p.generator_count) return false;
  const int n = int(table.size());
  if (n == 0) return false;
  for (int c = 0; c < n; ++c) {
    if (int(table.rows[c].size()) != 2 * p.generator_count) return false;
    for (int col = 0; col < 2 * p.generator_count; ++col) {
      int d = table.rows[c][col];
      if (d < 0 || d >= n) return false;            // complete
      if (table.rows[d][inv_col(col)] != c) return false;  // involutive
    }
  }
  // Connected from coset 0.
  std::vector<bool> seen(n, false);
  std::deque<int> queue{0};
  seen[0] = true;
  while (!queue.empty()) {
    int c = queue.front();
    queue.pop_front();
    for (int col = 0; col < 2 * p.generator_count; ++col)
      if (!seen[table.rows[c][col]]) {
        seen[table.rows[c][col]] = true;
        queue.push_back(table.rows[c][col]);
      }
  }
  if (!std::all_of(seen.begin(), seen.end(), [](bool b) { return b; })) return false;

  for (const Word& r : p.relators)
    for (int c = 0; c < n; ++c)
      if (table.trace(c, reduce_word(r)) != c) return false;
  for (const Word& w : subgroup_words)
    if (table.trace(0, reduce_word(w)) != 0) return false;
  return true;
}

}  // namespace npc2
