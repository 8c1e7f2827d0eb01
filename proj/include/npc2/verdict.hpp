// Three-valued verdicts with certificates, and the budget knobs that bound
// the semi-decision procedures behind them.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace npc2 {

enum class Verdict { Yes, No, Unknown };

const char* verdict_name(Verdict v);

struct Budgets {
  std::uint64_t tietze_moves = 10000;
  std::uint64_t max_cosets = 100000;
  std::size_t witness_word_length = 12;
  std::uint64_t collapse_nodes = 1000000;
};

struct BudgetSpent {
  std::uint64_t tietze_moves = 0;
  std::uint64_t cosets = 0;
  std::uint64_t words_tried = 0;
  std::uint64_t nodes_visited = 0;

  void add(const BudgetSpent& other) {
    tietze_moves += other.tietze_moves;
    cosets += other.cosets;
    words_tried += other.words_tried;
    nodes_visited += other.nodes_visited;
  }
};

/// Outcome of a budgeted decision. A Yes/No always names the certificate
/// that backs it; Unknown carries the exhausted budget counters instead.
struct TriVerdict {
  Verdict value = Verdict::Unknown;
  std::string certificate;        // e.g. "abelianization", "coset-index-1"
  std::string detail;
  std::vector<int> witness_word;  // signed generator letters, when applicable
  BudgetSpent spent;
};

}  // namespace npc2
