// npc2 command-line driver. Exit codes: 0 success/CLEAN/YES, 1 violation/NO,
// 2 UNKNOWN/inconclusive, 3 usage or input error.
#include <cstdlib>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "npc2/coset.hpp"
#include "npc2/harness.hpp"
#include "npc2/io.hpp"

namespace {

using namespace npc2;

constexpr int kExitOk = 0;
constexpr int kExitNo = 1;
constexpr int kExitUnknown = 2;
constexpr int kExitUsage = 3;

std::string read_stdin() {
  std::ostringstream ss;
  ss << std::cin.rdbuf();
  return ss.str();
}

ParsedComplex load_input(const std::string& path) {
  if (path == "-") return parse_complex_text(read_stdin());
  return parse_complex_file(path);
}

struct CommonOpts {
  std::string input = "-";
  std::string format = "human";
  Budgets budgets;
  double tol = kDefaultTolerance;
  bool assume_flat_ok = false;

  Format fmt() const { return format == "machine" ? Format::Machine : Format::Human; }
};

std::uint64_t env_budget(const char* name, std::uint64_t fallback) {
  const char* value = std::getenv(name);
  if (!value) return fallback;
  char* end = nullptr;
  unsigned long long parsed = std::strtoull(value, &end, 10);
  if (end == value || *end != '\0') return fallback;
  return parsed;
}

void attach_common(CLI::App* cmd, CommonOpts& opts, bool with_input = true) {
  if (with_input)
    cmd->add_option("input", opts.input, "complex file, or - for stdin");
  cmd->add_option("--format,-f", opts.format, "output format")
      ->check(CLI::IsMember({"human", "machine"}));
  // Environment variables give the defaults; flags win.
  opts.budgets.tietze_moves = env_budget("NPC2_BUDGET_TIETZE", opts.budgets.tietze_moves);
  opts.budgets.max_cosets = env_budget("NPC2_BUDGET_COSETS", opts.budgets.max_cosets);
  opts.budgets.witness_word_length =
      std::size_t(env_budget("NPC2_BUDGET_WITNESS_LEN", opts.budgets.witness_word_length));
  opts.budgets.collapse_nodes =
      env_budget("NPC2_BUDGET_COLLAPSE", opts.budgets.collapse_nodes);
  cmd->add_option("--budget-tietze", opts.budgets.tietze_moves, "Tietze move budget");
  cmd->add_option("--budget-cosets", opts.budgets.max_cosets, "coset table budget");
  cmd->add_option("--budget-witness-len", opts.budgets.witness_word_length,
                  "kernel witness word length");
  cmd->add_option("--budget-collapse", opts.budgets.collapse_nodes,
                  "collapse search node budget");
  cmd->add_option("--tol", opts.tol, "link condition tolerance");
  cmd->add_flag("--assume-flat-ok", opts.assume_flat_ok,
                "treat MARGINAL links as PASS for curvature claims");
}

int exit_for(Verdict v) {
  switch (v) {
    case Verdict::Yes: return kExitOk;
    case Verdict::No: return kExitNo;
    default: return kExitUnknown;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"nonpositive curvature, collapsibility and strong "
               "pi1-injectivity tools for finite 2-complexes"};
  app.require_subcommand(1);

  // generate
  auto* gen_cmd = app.add_subcommand("generate", "emit a builtin complex");
  std::string gen_name;
  long gen_n = -1, gen_k = -1;
  CommonOpts gen_opts;
  gen_cmd->add_option("name", gen_name,
                      "triangle|octahedron|disk_grid|torus_grid|cone|path")
      ->required();
  gen_cmd->add_option("--n", gen_n, "grid side (disk_grid, torus_grid)");
  gen_cmd->add_option("--k", gen_k, "size parameter (cone, path)");
  attach_common(gen_cmd, gen_opts, false);

  // validate
  auto* val_cmd = app.add_subcommand("validate", "check a complex file");
  CommonOpts val_opts;
  attach_common(val_cmd, val_opts);

  // curvature
  auto* cur_cmd = app.add_subcommand("curvature", "Gromov link condition");
  CommonOpts cur_opts;
  attach_common(cur_cmd, cur_opts);

  // cat0
  auto* cat_cmd = app.add_subcommand("cat0", "CAT(0) certification");
  CommonOpts cat_opts;
  attach_common(cat_cmd, cat_opts);

  // homology
  auto* hom_cmd = app.add_subcommand("homology", "integer homology");
  CommonOpts hom_opts;
  std::string hom_sub;
  attach_common(hom_cmd, hom_opts);
  hom_cmd->add_option("--sub", hom_sub, "subcomplex mask file");

  // pi1
  auto* pi1_cmd = app.add_subcommand("pi1", "fundamental group presentations");
  CommonOpts pi1_opts;
  std::string pi1_sub;
  attach_common(pi1_cmd, pi1_opts);
  pi1_cmd->add_option("--sub", pi1_sub, "subcomplex mask file");

  // collapse
  auto* col_cmd = app.add_subcommand("collapse", "collapsibility search");
  CommonOpts col_opts;
  attach_common(col_cmd, col_opts);

  // scan
  auto* scan_cmd = app.add_subcommand("scan", "strong pi1-injectivity scan");
  CommonOpts scan_opts;
  std::string scan_y, scan_z;
  std::size_t max_y = std::numeric_limits<std::size_t>::max();
  std::size_t max_z = std::numeric_limits<std::size_t>::max();
  int scan_threads = 1;
  bool scan_all_filter = false, scan_no_y_filter = false;
  attach_common(scan_cmd, scan_opts);
  scan_cmd->add_option("--y", scan_y, "fixed Y subcomplex file");
  scan_cmd->add_option("--z", scan_z, "fixed Z subcomplex file");
  scan_cmd->add_option("--max-y", max_y, "Y size cap (simplices)");
  scan_cmd->add_option("--max-z", max_z, "Z size cap (simplices)");
  scan_cmd->add_option("--threads", scan_threads, "worker threads");
  scan_cmd->add_flag("--all-subcomplexes", scan_all_filter,
                     "include disconnected subcomplexes");
  scan_cmd->add_flag("--no-require-y-injective", scan_no_y_filter,
                     "drop the pi1-injectivity hypothesis on Y");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*gen_cmd) {
      std::map<std::string, long> params;
      if (gen_n >= 0) params["n"] = gen_n;
      if (gen_k >= 0) params["k"] = gen_k;
      Generated g = generate(gen_name, params);
      // Always the file format: generate exists to feed the other commands.
      std::cout << emit_complex(g.complex, g.metric, g.name, Format::Machine);
      return kExitOk;
    }

    if (*val_cmd) {
      ValidationResult vr;
      try {
        ParsedComplex pc = load_input(val_opts.input);
        RawComplex raw;
        raw.vertices = pc.complex->vertices();
        for (const Edge& e : pc.complex->edges()) raw.edges.push_back({e[0], e[1]});
        for (const Triangle& t : pc.complex->triangles())
          raw.triangles.push_back({t[0], t[1], t[2]});
        vr = validate(raw);
      } catch (const Error& e) {
        if (e.code() == ErrorCode::ValidationError || e.code() == ErrorCode::ParseError) {
          std::cerr << e.what() << "\n";
          return kExitUsage;
        }
        throw;
      }
      std::cout << emit_validation(vr, val_opts.fmt());
      return vr.ok() ? kExitOk : kExitUsage;
    }

    if (*cur_cmd) {
      ParsedComplex pc = load_input(cur_opts.input);
      CurvatureReport report =
          check_link_condition(*pc.complex, pc.metric, cur_opts.tol);
      std::cout << emit_curvature(
          report, pc.metric_specified ? "specified" : "unit-default", cur_opts.fmt());
      if (report.fail_count > 0) return kExitNo;
      if (report.marginal_count > 0 && !cur_opts.assume_flat_ok) return kExitUnknown;
      return kExitOk;
    }

    if (*cat_cmd) {
      ParsedComplex pc = load_input(cat_opts.input);
      Cat0Result result = is_cat0(*pc.complex, pc.metric, cat_opts.budgets,
                                  cat_opts.tol, cat_opts.assume_flat_ok);
      std::cout << emit_cat0(result, cat_opts.fmt());
      return exit_for(result.verdict);
    }

    if (*hom_cmd) {
      ParsedComplex pc = load_input(hom_opts.input);
      Subcomplex target = hom_sub.empty()
                              ? Subcomplex::full(pc.complex)
                              : parse_subcomplex_file(hom_sub, pc.complex);
      std::cout << emit_homology(homology(target), hom_opts.fmt());
      return kExitOk;
    }

    if (*pi1_cmd) {
      ParsedComplex pc = load_input(pi1_opts.input);
      Subcomplex target = pi1_sub.empty()
                              ? Subcomplex::full(pc.complex)
                              : parse_subcomplex_file(pi1_sub, pc.complex);
      Pi1Report report;
      report.presentations = fundamental_groups(target);
      bool any_no = false, any_unknown = false;
      for (const GroupPresentation& p : report.presentations) {
        report.abelianizations.push_back(abelian_invariants(p));
        report.trivial.push_back(is_trivial_group(p, pi1_opts.budgets));
        if (report.trivial.back().value == Verdict::No) any_no = true;
        if (report.trivial.back().value == Verdict::Unknown) any_unknown = true;
      }
      std::cout << emit_pi1(report, pi1_opts.fmt());
      return any_no ? kExitNo : (any_unknown ? kExitUnknown : kExitOk);
    }

    if (*col_cmd) {
      ParsedComplex pc = load_input(col_opts.input);
      CollapseResult result =
          is_collapsible(*pc.complex, col_opts.budgets.collapse_nodes);
      std::cout << emit_collapse(result, col_opts.budgets.collapse_nodes,
                                 col_opts.fmt());
      return exit_for(result.verdict);
    }

    if (*scan_cmd) {
      ParsedComplex pc = load_input(scan_opts.input);
      ScanConfig cfg;
      cfg.budgets = scan_opts.budgets;
      cfg.max_y_size = max_y;
      cfg.max_z_size = max_z;
      cfg.threads = scan_threads;
      cfg.filter = scan_all_filter ? SubcomplexFilter::All : SubcomplexFilter::Connected;
      cfg.require_y_pi1_injective = !scan_no_y_filter;
      ScanReport report;
      if (!scan_y.empty() || !scan_z.empty()) {
        if (scan_y.empty() || scan_z.empty())
          throw Error(ErrorCode::BadParams, "--y and --z must be given together");
        Subcomplex y = parse_subcomplex_file(scan_y, pc.complex);
        Subcomplex z = parse_subcomplex_file(scan_z, pc.complex);
        report = scan_pair(y, z, cfg);
      } else {
        report = strong_injectivity_scan(pc.complex, cfg);
      }
      std::cout << emit_scan(report, scan_opts.fmt());
      switch (report.verdict) {
        case ScanOutcome::Clean: return kExitOk;
        case ScanOutcome::Violation: return kExitNo;
        default: return kExitUnknown;
      }
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
