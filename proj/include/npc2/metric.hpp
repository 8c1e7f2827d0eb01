// Piecewise-Euclidean metric data: edge lengths, corner angles, vertex links
// as angle-weighted graphs, link systoles and curvature verdicts.
#pragma once

#include <limits>
#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "npc2/complex.hpp"
#include "npc2/verdict.hpp"

namespace npc2 {

inline constexpr double kDegenerateSlack = 1e-12;
inline constexpr double kDefaultTolerance = 1e-9;

/// Positive edge lengths, indexed by the parent's canonical edge order.
/// Every triangle must satisfy the strict triangle inequality.
struct MetricAssignment {
  std::vector<double> lengths;

  static MetricAssignment unit(const Complex2& c);
  /// Missing edges default to length 1. Throws on unknown edges, nonpositive
  /// lengths, and triangle-inequality violations.
  static MetricAssignment from_map(const Complex2& c,
                                   const std::map<Edge, double>& given);

  double length(const Complex2& c, const Edge& e) const;
  void check(const Complex2& c) const;
};

/// Angle at the corner opposite side a, between sides b and c.
/// Throws Error(DegenerateTriangle) when the triangle inequality has slack
/// below kDegenerateSlack.
double corner_angle(double a, double b, double c);

/// Metric link of a vertex: one node per incident edge, one arc per incident
/// triangle weighted by its corner angle at the vertex.
struct LinkGraph {
  struct Arc {
    int u = 0, w = 0;
    double weight = 0.0;
    Triangle triangle{};
  };
  int vertex = -1;
  std::vector<Edge> node_edges;
  std::vector<Arc> arcs;
};

LinkGraph build_link(const Complex2& c, const MetricAssignment& m, int v);

/// Length of the shortest simple cycle of a weighted multigraph; +infinity
/// for forests. Arcs are (u, w, weight) with u == w allowed (self-loop).
double graph_systole(int node_count,
                     const std::vector<std::tuple<int, int, double>>& arcs);

double systole(const LinkGraph& g);

enum class LinkVerdict { Pass, Marginal, Fail };

const char* link_verdict_name(LinkVerdict v);

struct CurvatureReport {
  struct PerVertex {
    int vertex = -1;
    double systole = std::numeric_limits<double>::infinity();
    LinkVerdict verdict = LinkVerdict::Pass;
  };
  double tolerance = kDefaultTolerance;
  std::vector<PerVertex> vertices;
  int pass_count = 0, marginal_count = 0, fail_count = 0;
  bool nonpositively_curved = false;  // no FAIL and no MARGINAL
};

/// Gromov link condition, vertex by vertex. FAIL iff systole < 2pi - tol,
/// MARGINAL iff |systole - 2pi| <= tol, PASS otherwise.
CurvatureReport check_link_condition(const Complex2& c, const MetricAssignment& m,
                                     double tol = kDefaultTolerance);

struct Cat0Result {
  Verdict verdict = Verdict::Unknown;
  std::string witness_kind;    // "link-fail", "nontrivial-pi1", ...
  std::string witness_detail;
  CurvatureReport curvature;
  TriVerdict pi1_trivial;
};

/// CAT(0) certification for connected complexes: link condition plus
/// pi1-triviality. MARGINAL links block a YES unless assume_flat_ok is set.
Cat0Result is_cat0(const Complex2& c, const MetricAssignment& m,
                   const Budgets& budgets, double tol = kDefaultTolerance,
                   bool assume_flat_ok = false);

}  // namespace npc2
