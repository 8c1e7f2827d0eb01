#include "npc2/group.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

#include "npc2/coset.hpp"

namespace npc2 {

Word reduce_word(Word w) {
  Word out;
  for (int letter : w) {
    if (letter == 0) continue;
    if (!out.empty() && out.back() == -letter)
      out.pop_back();
    else
      out.push_back(letter);
  }
  return out;
}

Word inverse_word(const Word& w) {
  Word out(w.rbegin(), w.rend());
  for (int& letter : out) letter = -letter;
  return out;
}

std::string word_to_string(const Word& w) {
  if (w.empty()) return "1";
  bool alpha = true;
  for (int letter : w)
    if (std::abs(letter) > 26) alpha = false;
  std::string s;
  for (int letter : w) {
    if (alpha) {
      char base = letter > 0 ? 'a' : 'A';
      s += char(base + std::abs(letter) - 1);
    } else {
      if (!s.empty()) s += '.';
      s += 'x' + std::to_string(std::abs(letter));
      if (letter < 0) s += '\'';
    }
  }
  return s;
}

GroupPresentation fundamental_group(const Subcomplex& s,
                                    std::size_t component_index) {
  ComponentDecomposition decomp = connected_components(s);
  if (component_index >= decomp.count())
    throw Error(ErrorCode::EmptyComponent,
                "component " + std::to_string(component_index) + " of " +
                    std::to_string(decomp.count()));
  const Subcomplex& comp = decomp.components[component_index];
  const Complex2& p = comp.parent();

  SpanningTreeOrigin origin;
  origin.basepoint = decomp.basepoints[component_index];

  // BFS over the component, neighbors in ascending vertex order.
  std::vector<Edge> comp_edges = comp.edge_list();
  std::map<int, std::vector<std::pair<int, Edge>>> adjacency;
  for (const Edge& e : comp_edges) {
    adjacency[e[0]].push_back({e[1], e});
    adjacency[e[1]].push_back({e[0], e});
  }
  for (auto& [v, nbrs] : adjacency) std::sort(nbrs.begin(), nbrs.end());

  std::map<Edge, bool> in_tree;
  for (const Edge& e : comp_edges) in_tree[e] = false;
  origin.parent_vertex[origin.basepoint] = origin.basepoint;
  std::deque<int> queue{origin.basepoint};
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop_front();
    for (const auto& [w, e] : adjacency[u]) {
      if (origin.parent_vertex.count(w)) continue;
      origin.parent_vertex[w] = u;
      in_tree[e] = true;
      queue.push_back(w);
    }
  }

  GroupPresentation pres;
  for (const Edge& e : comp_edges) {
    if (in_tree[e]) {
      origin.edge_letters[e] = 0;
    } else {
      origin.generator_edges.push_back(e);
      origin.edge_letters[e] = ++pres.generator_count;
    }
  }

  auto letter = [&](int from, int to) {
    int l = origin.edge_letters.at(make_edge(from, to));
    return from < to ? l : -l;
  };
  for (const Triangle& t : comp.triangle_list()) {
    Word w;
    for (auto [a, b] : {std::pair{t[0], t[1]}, {t[1], t[2]}, {t[2], t[0]}}) {
      int l = letter(a, b);
      if (l != 0) w.push_back(l);
    }
    pres.relators.push_back(reduce_word(std::move(w)));
  }
  pres.origin = std::move(origin);
  return pres;
}

std::vector<GroupPresentation> fundamental_groups(const Subcomplex& s) {
  std::vector<GroupPresentation> out;
  std::size_t n = connected_components(s).count();
  for (std::size_t i = 0; i < n; ++i) out.push_back(fundamental_group(s, i));
  return out;
}

namespace {

std::vector<int> tree_path_to_base(const SpanningTreeOrigin& o, int v) {
  std::vector<int> path{v};
  while (v != o.basepoint) {
    v = o.parent_vertex.at(v);
    path.push_back(v);
  }
  return path;
}

}  // namespace

std::vector<int> generator_loop(const GroupPresentation& p, int gen) {
  const SpanningTreeOrigin& o = p.origin.value();
  const Edge& e = o.generator_edges.at(gen);
  std::vector<int> down = tree_path_to_base(o, e[0]);  // e[0] .. basepoint
  std::vector<int> up = tree_path_to_base(o, e[1]);    // e[1] .. basepoint
  std::vector<int> loop(down.rbegin(), down.rend());   // basepoint .. e[0]
  loop.insert(loop.end(), up.begin(), up.end());       // e[1] .. basepoint
  return loop;
}

std::vector<int> word_loop(const GroupPresentation& p, const Word& w) {
  const SpanningTreeOrigin& o = p.origin.value();
  std::vector<int> loop{o.basepoint};
  for (int letter : w) {
    std::vector<int> piece = generator_loop(p, std::abs(letter) - 1);
    if (letter < 0) std::reverse(piece.begin(), piece.end());
    loop.insert(loop.end(), piece.begin() + 1, piece.end());
  }
  return loop;
}

Word loop_word(const GroupPresentation& p, const std::vector<int>& loop) {
  const SpanningTreeOrigin& o = p.origin.value();
  Word w;
  for (std::size_t i = 0; i + 1 < loop.size(); ++i) {
    Edge e = make_edge(loop[i], loop[i + 1]);
    auto it = o.edge_letters.find(e);
    if (it == o.edge_letters.end())
      throw Error(ErrorCode::UnknownSimplex,
                  "loop leaves the presented component at edge " +
                      std::to_string(e[0]) + "-" + std::to_string(e[1]));
    if (it->second == 0) continue;
    w.push_back(loop[i] < loop[i + 1] ? it->second : -it->second);
  }
  return reduce_word(std::move(w));
}

IntMatrix abelianized_relators(const GroupPresentation& p) {
  IntMatrix m(p.generator_count, p.relators.size());
  for (std::size_t j = 0; j < p.relators.size(); ++j)
    for (int letter : p.relators[j])
      m.at(std::abs(letter) - 1, j) += letter > 0 ? 1 : -1;
  return m;
}

AbelianInvariants abelian_invariants(const GroupPresentation& p) {
  SmithResult snf = smith_normal_form(abelianized_relators(p));
  AbelianInvariants inv;
  inv.free_rank = long(p.generator_count) - long(snf.rank);
  for (const Integer& d : snf.invariant_factors)
    if (d > 1) inv.torsion.push_back(d);
  return inv;
}

std::string AbelianInvariants::to_string() const {
  if (trivial()) return "0";
  std::string s;
  if (free_rank > 0) s = "Z^" + std::to_string(free_rank);
  for (const Integer& d : torsion) {
    if (!s.empty()) s += " + ";
    s += "Z/" + d.str();
  }
  return s;
}

std::vector<Integer> abelianize_word(const Word& w, int generator_count) {
  std::vector<Integer> v(generator_count, 0);
  for (int letter : w) v[std::abs(letter) - 1] += letter > 0 ? 1 : -1;
  return v;
}

namespace {

// SNF coordinates of vec: y = U * vec; the class of vec in coker(relmat) is
// zero iff y_i is divisible by d_i on the diagonal and zero past the rank.
std::vector<Integer> snf_coordinates(const SmithResult& snf,
                                     const std::vector<Integer>& vec) {
  std::vector<Integer> y(snf.u.rows, 0);
  for (std::size_t i = 0; i < snf.u.rows; ++i)
    for (std::size_t j = 0; j < snf.u.cols; ++j) y[i] += snf.u.at(i, j) * vec[j];
  return y;
}

}  // namespace

bool zero_in_cokernel(const IntMatrix& relmat, const std::vector<Integer>& vec) {
  SmithResult snf = smith_normal_form(relmat);
  std::vector<Integer> y = snf_coordinates(snf, vec);
  for (std::size_t i = 0; i < y.size(); ++i) {
    if (i < snf.rank) {
      if (y[i] % snf.d.at(i, i) != 0) return false;
    } else if (y[i] != 0) {
      return false;
    }
  }
  return true;
}

bool infinite_order_in_cokernel(const IntMatrix& relmat,
                                const std::vector<Integer>& vec) {
  SmithResult snf = smith_normal_form(relmat);
  std::vector<Integer> y = snf_coordinates(snf, vec);
  for (std::size_t i = snf.rank; i < y.size(); ++i)
    if (y[i] != 0) return true;
  return false;
}

namespace {

Word cyclic_reduce(Word w) {
  w = reduce_word(std::move(w));
  while (w.size() >= 2 && w.front() == -w.back()) {
    w.erase(w.begin());
    w.pop_back();
  }
  return w;
}

// Canonical key for duplicate detection: lexicographically least cyclic
// rotation among the word and its inverse.
Word cyclic_key(const Word& w) {
  if (w.empty()) return w;
  Word best;
  for (const Word& base : {w, inverse_word(w)}) {
    for (std::size_t s = 0; s < base.size(); ++s) {
      Word rot(base.begin() + s, base.end());
      rot.insert(rot.end(), base.begin(), base.begin() + s);
      if (best.empty() || rot < best) best = rot;
    }
  }
  return best;
}

struct TietzeState {
  int generators;
  std::vector<Word> relators;
  std::uint64_t moves = 0, budget;
  bool exhausted = false;

  bool spend() {
    if (moves >= budget) {
      exhausted = true;
      return false;
    }
    ++moves;
    return true;
  }

  // One normalization sweep; true when something changed.
  bool normalize() {
    bool changed = false;
    for (Word& r : relators) {
      Word reduced = cyclic_reduce(r);
      if (reduced != r) {
        if (!spend()) return changed;
        r = std::move(reduced);
        changed = true;
      }
    }
    // Drop empties and duplicates (up to rotation and inversion).
    std::vector<Word> kept;
    std::vector<Word> keys;
    for (const Word& r : relators) {
      if (r.empty()) {
        if (!spend()) return true;
        changed = true;
        continue;
      }
      Word key = cyclic_key(r);
      if (std::find(keys.begin(), keys.end(), key) != keys.end()) {
        if (!spend()) return true;
        changed = true;
        continue;
      }
      keys.push_back(std::move(key));
      kept.push_back(r);
    }
    relators = std::move(kept);
    return changed;
  }

  bool eliminate_length_one() {
    for (std::size_t i = 0; i < relators.size(); ++i) {
      if (relators[i].size() != 1) continue;
      if (!spend()) return false;
      int gen = std::abs(relators[i][0]);
      relators.erase(relators.begin() + i);
      for (Word& r : relators) {
        Word out;
        for (int letter : r) {
          if (std::abs(letter) == gen) continue;  // substitute gen = 1
          if (std::abs(letter) > gen) letter = letter > 0 ? letter - 1 : letter + 1;
          out.push_back(letter);
        }
        r = reduce_word(std::move(out));
      }
      --generators;
      return true;
    }
    return false;
  }

  // Replace long overlaps with shorter complements: if more than half of a
  // relator r (any rotation, either direction) occurs inside s, substitute.
  bool substitute() {
    std::vector<std::size_t> order(relators.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return relators[a].size() < relators[b].size() ||
             (relators[a].size() == relators[b].size() && relators[a] < relators[b]);
    });
    for (std::size_t oi : order) {
      const Word r = relators[oi];
      const std::size_t len = r.size();
      if (len < 2) continue;
      for (const Word& base : {r, inverse_word(r)}) {
        for (std::size_t rot = 0; rot < len; ++rot) {
          Word rotated(base.begin() + rot, base.end());
          rotated.insert(rotated.end(), base.begin(), base.begin() + rot);
          for (std::size_t m = len - 1; m > len / 2; --m) {
            Word pattern(rotated.begin(), rotated.begin() + m);
            Word replacement =
                inverse_word(Word(rotated.begin() + m, rotated.end()));
            for (std::size_t sj = 0; sj < relators.size(); ++sj) {
              if (sj == oi) continue;
              Word& s = relators[sj];
              if (s.size() < m) continue;
              for (std::size_t pos = 0; pos + m <= s.size(); ++pos) {
                if (!std::equal(pattern.begin(), pattern.end(), s.begin() + pos))
                  continue;
                if (!spend()) return false;
                Word next(s.begin(), s.begin() + pos);
                next.insert(next.end(), replacement.begin(), replacement.end());
                next.insert(next.end(), s.begin() + pos + m, s.end());
                s = reduce_word(std::move(next));
                return true;
              }
            }
          }
        }
      }
    }
    return false;
  }
};

}  // namespace

TietzeResult tietze_simplify(const GroupPresentation& p, std::uint64_t max_moves) {
  TietzeState state{p.generator_count, p.relators, 0, max_moves};
  for (Word& r : state.relators) r = reduce_word(std::move(r));
  bool progress = true;
  while (progress && !state.exhausted) {
    progress = false;
    if (state.normalize()) progress = true;
    if (state.exhausted) break;
    if (state.eliminate_length_one()) {
      progress = true;
      continue;
    }
    if (state.exhausted) break;
    if (state.substitute()) progress = true;
  }

  TietzeResult result;
  result.presentation.generator_count = state.generators;
  result.presentation.relators = std::move(state.relators);
  result.moves_used = state.moves;
  result.exhausted = state.exhausted;
  return result;
}

TriVerdict is_trivial_group(const GroupPresentation& p, const Budgets& budgets) {
  TriVerdict verdict;

  AbelianInvariants inv = abelian_invariants(p);
  if (!inv.trivial()) {
    verdict.value = Verdict::No;
    verdict.certificate = "abelianization";
    verdict.detail = "H1 = " + inv.to_string();
    // A generator with nonzero class witnesses nontriviality.
    IntMatrix relmat = abelianized_relators(p);
    for (int g = 0; g < p.generator_count; ++g) {
      std::vector<Integer> unit(p.generator_count, 0);
      unit[g] = 1;
      if (!zero_in_cokernel(relmat, unit)) {
        verdict.witness_word = {g + 1};
        break;
      }
    }
    return verdict;
  }

  if (p.generator_count == 0) {
    verdict.value = Verdict::Yes;
    verdict.certificate = "empty-presentation";
    return verdict;
  }

  TietzeResult tz = tietze_simplify(p, budgets.tietze_moves);
  verdict.spent.tietze_moves = tz.moves_used;
  if (tz.presentation.generator_count == 0) {
    verdict.value = Verdict::Yes;
    verdict.certificate = "tietze-empty";
    verdict.detail = std::to_string(tz.moves_used) + " moves";
    return verdict;
  }

  CosetResult ce =
      coset_enumeration(tz.presentation, {}, budgets.max_cosets);
  verdict.spent.cosets = ce.cosets_defined;
  if (ce.verdict == Verdict::Yes) {
    if (ce.index == 1) {
      verdict.value = Verdict::Yes;
      verdict.certificate = "coset-index-1";
      verdict.detail = "enumeration over the simplified presentation closed";
      return verdict;
    }
    verdict.value = Verdict::No;
    verdict.certificate = "coset-table";
    verdict.detail = "regular representation has " + std::to_string(ce.index) +
                     " cosets";
    for (int g = 0; g < tz.presentation.generator_count; ++g)
      if (ce.table.act(0, g + 1) != 0) {
        verdict.witness_word = {g + 1};
        break;
      }
    return verdict;
  }

  verdict.value = Verdict::Unknown;
  verdict.detail = "budgets exhausted";
  return verdict;
}

}  // namespace npc2
