#include "npc2/harness.hpp"

#include <algorithm>
#include <thread>

namespace npc2 {

const char* scan_outcome_name(ScanOutcome o) {
  switch (o) {
    case ScanOutcome::Clean: return "CLEAN";
    case ScanOutcome::Violation: return "VIOLATION";
    default: return "INCONCLUSIVE";
  }
}

namespace {

// Recursive enumeration over (triangle set, extra edges, extra vertices).
// Every face-closed subcomplex arises from exactly one such triple, so the
// stream is duplicate-free, and index-order recursion makes it canonical.
struct Enumerator {
  const Complex2& p;
  std::shared_ptr<const Complex2> parent;
  std::size_t cap;
  SubcomplexFilter filter;
  const std::function<bool(const Subcomplex&)>& fn;

  bool stopped = false;
  bool cap_pruned = false;
  BitMask tmask, emask, vmask;

  bool emit() {
    if (!vmask.any()) return true;  // skip the empty subcomplex
    Subcomplex s(parent, vmask, emask, tmask);
    if (filter == SubcomplexFilter::Connected && !is_connected(s)) return true;
    if (!fn(s)) {
      stopped = true;
      return false;
    }
    return true;
  }

  std::size_t current_size() const {
    return tmask.count() + emask.count() + vmask.count();
  }

  // Phase 3: optional isolated vertices not yet covered.
  bool vertices_from(std::size_t i) {
    if (!emit()) return false;
    for (std::size_t k = i; k < p.vertices().size(); ++k) {
      if (vmask.test(k)) continue;
      if (current_size() + 1 > cap) {
        cap_pruned = true;
        return true;
      }
      vmask.set(k);
      if (!vertices_from(k + 1)) return false;
      vmask.reset(k);
    }
    return true;
  }

  // Phase 2: optional edges beyond the triangle-forced ones.
  bool edges_from(std::size_t i) {
    if (!vertices_from(0)) return false;
    for (std::size_t k = i; k < p.edges().size(); ++k) {
      if (emask.test(k)) continue;
      const Edge& e = p.edges()[k];
      int a = p.vertex_index(e[0]), b = p.vertex_index(e[1]);
      bool add_a = !vmask.test(a), add_b = !vmask.test(b);
      std::size_t grow = 1 + std::size_t(add_a) + std::size_t(add_b);
      if (current_size() + grow > cap) {
        cap_pruned = true;
        continue;
      }
      emask.set(k);
      if (add_a) vmask.set(a);
      if (add_b) vmask.set(b);
      if (!edges_from(k + 1)) return false;
      emask.reset(k);
      if (add_a) vmask.reset(a);
      if (add_b) vmask.reset(b);
    }
    return true;
  }

  // Phase 1: triangle subsets, with forced faces.
  bool triangles_from(std::size_t i) {
    if (!edges_from(0)) return false;
    for (std::size_t k = i; k < p.triangles().size(); ++k) {
      const Triangle& t = p.triangles()[k];
      std::vector<int> new_edges, new_verts;
      for (const Edge& e : Complex2::triangle_edges(t)) {
        int ei = p.edge_index(e);
        if (!emask.test(ei)) new_edges.push_back(ei);
      }
      for (int v : t) {
        int vi = p.vertex_index(v);
        if (!vmask.test(vi)) new_verts.push_back(vi);
      }
      if (current_size() + 1 + new_edges.size() + new_verts.size() > cap) {
        cap_pruned = true;
        continue;
      }
      tmask.set(k);
      for (int ei : new_edges) emask.set(ei);
      for (int vi : new_verts) vmask.set(vi);
      if (!triangles_from(k + 1)) return false;
      tmask.reset(k);
      for (int ei : new_edges) emask.reset(ei);
      for (int vi : new_verts) vmask.reset(vi);
    }
    return true;
  }
};

}  // namespace

bool enumerate_subcomplexes(const std::shared_ptr<const Complex2>& c,
                            std::size_t cap, SubcomplexFilter filter,
                            const std::function<bool(const Subcomplex&)>& fn) {
  Enumerator en{*c,
                c,
                cap,
                filter,
                fn,
                false,
                false,
                BitMask(c->triangles().size()),
                BitMask(c->edges().size()),
                BitMask(c->vertices().size())};
  en.triangles_from(0);
  return !en.stopped;
}

std::vector<Subcomplex> list_subcomplexes(const std::shared_ptr<const Complex2>& c,
                                          std::size_t cap, SubcomplexFilter filter) {
  std::vector<Subcomplex> out;
  enumerate_subcomplexes(c, cap, filter, [&](const Subcomplex& s) {
    out.push_back(s);
    return true;
  });
  return out;
}

namespace {

// list_subcomplexes plus the fact of cap pruning, for honest scan reports.
std::pair<std::vector<Subcomplex>, bool> list_with_truncation(
    const std::shared_ptr<const Complex2>& c, std::size_t cap,
    SubcomplexFilter filter) {
  std::vector<Subcomplex> out;
  std::function<bool(const Subcomplex&)> collect = [&](const Subcomplex& s) {
    out.push_back(s);
    return true;
  };
  Enumerator en{*c,
                c,
                cap,
                filter,
                collect,
                false,
                false,
                BitMask(c->triangles().size()),
                BitMask(c->edges().size()),
                BitMask(c->vertices().size())};
  en.triangles_from(0);
  return {std::move(out), en.cap_pruned};
}

struct PairOutcome {
  std::vector<ScanViolation> violations;
  std::vector<ScanUnknown> unknowns;
  BudgetSpent spent;
};

PairOutcome test_pair(const Subcomplex& y, const Subcomplex& z,
                      const Budgets& budgets) {
  PairOutcome out;
  Subcomplex meet = intersect(y, z);
  if (meet.is_empty()) return out;
  InjectivityResult res = induced_map_injectivity(meet, z, budgets);
  out.spent = res.total_spent();
  for (ComponentVerdict& cv : res.components) {
    if (cv.verdict.value == Verdict::No) {
      out.violations.push_back({y.simplex_set(), z.simplex_set(), cv});
    } else if (cv.verdict.value == Verdict::Unknown) {
      out.unknowns.push_back(
          {y.simplex_set(), z.simplex_set(), cv.basepoint, cv.verdict.spent});
    }
  }
  return out;
}

void set_overall(ScanReport& report) {
  if (!report.violations.empty())
    report.verdict = ScanOutcome::Violation;
  else if (!report.unknowns.empty())
    report.verdict = ScanOutcome::Inconclusive;
  else
    report.verdict = ScanOutcome::Clean;
}

void replay_violations(const std::shared_ptr<const Complex2>& c, ScanReport& report) {
  report.violations_verified = true;
  for (const ScanViolation& v : report.violations) {
    Subcomplex y = closure(c, v.y);
    Subcomplex z = closure(c, v.z);
    if (!verify_violation(intersect(y, z), z, v.component, report.config.budgets))
      report.violations_verified = false;
  }
}

}  // namespace

ScanReport strong_injectivity_scan(const std::shared_ptr<const Complex2>& c,
                                   const ScanConfig& cfg) {
  ScanReport report;
  report.config = cfg;

  auto [zs, z_trunc] = list_with_truncation(c, cfg.max_z_size, cfg.filter);
  report.z_candidates = zs.size();
  report.z_enumeration_truncated = z_trunc;

  auto [ys_all, y_trunc] = list_with_truncation(c, cfg.max_y_size, cfg.filter);
  report.y_enumeration_truncated = y_trunc;

  // Theorem hypothesis: Y must be pi1-injective in the whole complex.
  Subcomplex whole = Subcomplex::full(c);
  std::vector<Subcomplex> ys;
  for (const Subcomplex& y : ys_all) {
    if (!cfg.require_y_pi1_injective) {
      ys.push_back(y);
      continue;
    }
    InjectivityResult inj = induced_map_injectivity(y, whole, cfg.budgets);
    report.spent.add(inj.total_spent());
    switch (inj.aggregate()) {
      case Verdict::Yes: ys.push_back(y); break;
      case Verdict::No: ++report.y_skipped_not_injective; break;
      case Verdict::Unknown: ++report.y_skipped_pi1_unknown; break;
    }
  }
  report.y_candidates = ys.size();

  // Pairs are independent; shard by Y index and merge in canonical order.
  const int threads = std::max(1, cfg.threads);
  std::vector<std::vector<PairOutcome>> outcomes(ys.size());
  auto work = [&](int shard) {
    for (std::size_t yi = shard; yi < ys.size(); yi += std::size_t(threads)) {
      outcomes[yi].reserve(zs.size());
      for (const Subcomplex& z : zs)
        outcomes[yi].push_back(test_pair(ys[yi], z, cfg.budgets));
    }
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(work, t);
    for (auto& th : pool) th.join();
  }

  for (std::size_t yi = 0; yi < ys.size(); ++yi)
    for (PairOutcome& po : outcomes[yi]) {
      ++report.pairs_tested;
      report.spent.add(po.spent);
      for (auto& v : po.violations) report.violations.push_back(std::move(v));
      for (auto& u : po.unknowns) report.unknowns.push_back(std::move(u));
    }

  replay_violations(c, report);
  set_overall(report);
  return report;
}

ScanReport scan_pair(const Subcomplex& y, const Subcomplex& z, const ScanConfig& cfg) {
  ScanReport report;
  report.config = cfg;
  report.y_candidates = 1;
  report.z_candidates = 1;
  PairOutcome po = test_pair(y, z, cfg.budgets);
  report.pairs_tested = 1;
  report.spent.add(po.spent);
  report.violations = std::move(po.violations);
  report.unknowns = std::move(po.unknowns);
  replay_violations(y.parent_ptr(), report);
  set_overall(report);
  return report;
}

}  // namespace npc2
