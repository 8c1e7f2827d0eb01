// Builtin example generators, face-closed subcomplex enumeration, and the
// exhaustive strong pi1-injectivity scanner.
#pragma once

#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "npc2/complex.hpp"
#include "npc2/injectivity.hpp"
#include "npc2/metric.hpp"
#include "npc2/verdict.hpp"

namespace npc2 {

struct Generated {
  Complex2 complex;
  MetricAssignment metric;  // unit lengths; reports must say so
  std::string name;
};

/// Builtin generators: triangle, octahedron, disk_grid(n), torus_grid(n),
/// cone(k), path(k). disk_grid(n) is the n x n vertex grid triangulated by
/// parallel diagonals; torus_grid wraps it (n >= 3). Deterministic labeling.
Generated generate(const std::string& name, const std::map<std::string, long>& params);

enum class SubcomplexFilter { All, Connected };

/// Visits every nonempty face-closed subcomplex with at most cap simplices
/// that matches the filter, in a fixed canonical order without duplicates.
/// The callback returns false to stop early. Returns false when stopped.
bool enumerate_subcomplexes(const std::shared_ptr<const Complex2>& c,
                            std::size_t cap, SubcomplexFilter filter,
                            const std::function<bool(const Subcomplex&)>& fn);

std::vector<Subcomplex> list_subcomplexes(const std::shared_ptr<const Complex2>& c,
                                          std::size_t cap, SubcomplexFilter filter);

struct ScanConfig {
  std::size_t max_y_size = std::numeric_limits<std::size_t>::max();
  std::size_t max_z_size = std::numeric_limits<std::size_t>::max();
  Budgets budgets;
  bool require_y_pi1_injective = true;
  SubcomplexFilter filter = SubcomplexFilter::Connected;
  int threads = 1;
};

struct ScanViolation {
  SimplexSet y, z;
  ComponentVerdict component;
};

struct ScanUnknown {
  SimplexSet y, z;
  int basepoint = -1;
  BudgetSpent spent;
};

enum class ScanOutcome { Clean, Violation, Inconclusive };

const char* scan_outcome_name(ScanOutcome o);

struct ScanReport {
  ScanOutcome verdict = ScanOutcome::Clean;
  std::uint64_t pairs_tested = 0;
  std::vector<ScanViolation> violations;
  std::vector<ScanUnknown> unknowns;
  std::uint64_t y_candidates = 0, z_candidates = 0;
  std::uint64_t y_skipped_pi1_unknown = 0;  // theorem hypothesis undecided
  std::uint64_t y_skipped_not_injective = 0;
  bool y_enumeration_truncated = false;  // a size cap pruned candidates
  bool z_enumeration_truncated = false;
  ScanConfig config;
  BudgetSpent spent;
  bool violations_verified = false;  // every violation replayed successfully
};

/// Tests the inclusion-induced maps pi1(Y cap Z) -> pi1(Z) over all admissible
/// subcomplex pairs. Deterministic: results are merged in canonical pair
/// order regardless of thread count.
ScanReport strong_injectivity_scan(const std::shared_ptr<const Complex2>& c,
                                   const ScanConfig& cfg);

/// Single-pair scan for explicitly given Y and Z.
ScanReport scan_pair(const Subcomplex& y, const Subcomplex& z,
                     const ScanConfig& cfg);

}  // namespace npc2
