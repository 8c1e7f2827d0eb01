// Todd-Coxeter coset enumeration with a closed-table certificate.
#pragma once

#include <cstdint>
#include <vector>

#include "npc2/group.hpp"
#include "npc2/verdict.hpp"

namespace npc2 {

/// Closed coset table: row per coset, a column per generator and inverse.
/// Row 0 is the subgroup's own coset.
struct CosetTable {
  int generator_count = 0;
  std::vector<std::vector<int>> rows;  // rows[c][2g] forward, [2g+1] inverse

  std::size_t size() const { return rows.size(); }
  /// Image of coset under a single letter; -1 when undefined.
  int act(int coset, int letter) const {
    int col = letter > 0 ? 2 * (letter - 1) : 2 * (-letter - 1) + 1;
    return rows[coset][col];
  }
  /// Traces a word; -1 when an undefined entry is hit.
  int trace(int coset, const Word& w) const {
    for (int letter : w) {
      coset = act(coset, letter);
      if (coset < 0) return -1;
    }
    return coset;
  }
};

struct CosetResult {
  Verdict verdict = Verdict::Unknown;  // Yes = enumeration closed
  std::size_t index = 0;               // valid when closed
  CosetTable table;                    // standardized, live cosets only
  std::uint64_t cosets_defined = 0;    // total definitions, dead ones included
};

/// HLT-style enumeration of the cosets of <subgroup_words> in the presented
/// group. Returns Unknown when more than max_cosets rows would be needed.
CosetResult coset_enumeration(const GroupPresentation& p,
                              const std::vector<Word>& subgroup_words,
                              std::uint64_t max_cosets);

/// Independent check of a claimed certificate: completeness, involution
/// consistency, connectivity, relators fixing every coset and subgroup words
/// fixing coset 0.
bool verify_coset_certificate(const GroupPresentation& p,
                              const std::vector<Word>& subgroup_words,
                              const CosetTable& table);

}  // namespace npc2
