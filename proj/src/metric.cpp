#include "npc2/metric.hpp"

#include <algorithm>
#include <cmath>

#include "npc2/group.hpp"

namespace npc2 {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::string edge_name(const Edge& e) {
  return std::to_string(e[0]) + "-" + std::to_string(e[1]);
}

}  // namespace

MetricAssignment MetricAssignment::unit(const Complex2& c) {
  MetricAssignment m;
  m.lengths.assign(c.edges().size(), 1.0);
  return m;
}

MetricAssignment MetricAssignment::from_map(const Complex2& c,
                                            const std::map<Edge, double>& given) {
  MetricAssignment m = unit(c);
  for (const auto& [e, len] : given) {
    int i = c.edge_index(e);
    if (i < 0)
      throw Error(ErrorCode::ValidationError,
                  "length given for unknown edge " + edge_name(e));
    if (!(len > 0.0))
      throw Error(ErrorCode::ValidationError,
                  "nonpositive length for edge " + edge_name(e));
    m.lengths[i] = len;
  }
  m.check(c);
  return m;
}

double MetricAssignment::length(const Complex2& c, const Edge& e) const {
  return lengths[c.edge_index(e)];
}

void MetricAssignment::check(const Complex2& c) const {
  if (lengths.size() != c.edges().size())
    throw Error(ErrorCode::ValidationError, "length table size mismatch");
  for (double len : lengths)
    if (!(len > 0.0))
      throw Error(ErrorCode::ValidationError, "nonpositive edge length");
  for (const Triangle& t : c.triangles()) {
    const auto faces = Complex2::triangle_edges(t);
    double a = length(c, faces[0]), b = length(c, faces[1]), cc = length(c, faces[2]);
    if (a + b - cc < kDegenerateSlack || b + cc - a < kDegenerateSlack ||
        a + cc - b < kDegenerateSlack)
      throw Error(ErrorCode::DegenerateTriangle,
                  "triangle {" + std::to_string(t[0]) + "," + std::to_string(t[1]) +
                      "," + std::to_string(t[2]) + "} violates the triangle inequality");
  }
}

double corner_angle(double a, double b, double c) {
  if (b + c - a < kDegenerateSlack || a + c - b < kDegenerateSlack ||
      a + b - c < kDegenerateSlack)
    throw Error(ErrorCode::DegenerateTriangle,
                "sides " + std::to_string(a) + ", " + std::to_string(b) + ", " +
                    std::to_string(c));
  double cosine = (b * b + c * c - a * a) / (2.0 * b * c);
  cosine = std::clamp(cosine, -1.0, 1.0);
  return std::acos(cosine);
}

LinkGraph build_link(const Complex2& c, const MetricAssignment& m, int v) {
  if (!c.has_vertex(v)) throw Error(ErrorCode::UnknownVertex, std::to_string(v));
  LinkGraph g;
  g.vertex = v;
  for (int ei : c.incident_edges(v)) g.node_edges.push_back(c.edges()[ei]);
  auto node_of = [&](const Edge& e) {
    auto it = std::find(g.node_edges.begin(), g.node_edges.end(), e);
    return int(it - g.node_edges.begin());
  };
  for (int ti : c.incident_triangles(v)) {
    const Triangle& t = c.triangles()[ti];
    std::array<int, 2> others{};
    int k = 0;
    for (int w : t)
      if (w != v) others[k++] = w;
    Edge eu = make_edge(v, others[0]);
    Edge ew = make_edge(v, others[1]);
    // Corner at v: opposite side joins the two other vertices.
    double opposite = m.length(c, make_edge(others[0], others[1]));
    double angle = corner_angle(opposite, m.length(c, eu), m.length(c, ew));
    g.arcs.push_back({node_of(eu), node_of(ew), angle, t});
  }
  return g;
}

double graph_systole(int node_count,
                     const std::vector<std::tuple<int, int, double>>& arcs) {
  double best = kInf;
  // Shortest cycle through arc k = shortest path between its endpoints in the
  // graph minus that arc, plus the arc's weight. Self-loops are their own
  // cycles. Dijkstra over the small dense graph is plenty here.
  for (std::size_t k = 0; k < arcs.size(); ++k) {
    const auto& [u, w, weight] = arcs[k];
    if (u == w) {
      best = std::min(best, weight);
      continue;
    }
    std::vector<double> dist(node_count, kInf);
    std::vector<bool> done(node_count, false);
    dist[u] = 0.0;
    for (int round = 0; round < node_count; ++round) {
      int x = -1;
      for (int i = 0; i < node_count; ++i)
        if (!done[i] && (x < 0 || dist[i] < dist[x])) x = i;
      if (x < 0 || dist[x] == kInf) break;
      done[x] = true;
      for (std::size_t j = 0; j < arcs.size(); ++j) {
        if (j == k) continue;
        const auto& [a, b, wt] = arcs[j];
        if (a == x && dist[x] + wt < dist[b]) dist[b] = dist[x] + wt;
        if (b == x && dist[x] + wt < dist[a]) dist[a] = dist[x] + wt;
      }
    }
    best = std::min(best, dist[w] + weight);
  }
  return best;
}

double systole(const LinkGraph& g) {
  std::vector<std::tuple<int, int, double>> arcs;
  arcs.reserve(g.arcs.size());
  for (const auto& arc : g.arcs) arcs.emplace_back(arc.u, arc.w, arc.weight);
  return graph_systole(int(g.node_edges.size()), arcs);
}

const char* link_verdict_name(LinkVerdict v) {
  switch (v) {
    case LinkVerdict::Pass: return "PASS";
    case LinkVerdict::Marginal: return "MARGINAL";
    default: return "FAIL";
  }
}

CurvatureReport check_link_condition(const Complex2& c, const MetricAssignment& m,
                                     double tol) {
  if (tol < 0) throw Error(ErrorCode::BadParams, "negative tolerance");
  m.check(c);
  CurvatureReport report;
  report.tolerance = tol;
  const double two_pi = 2.0 * M_PI;
  for (int v : c.vertices()) {
    double s = systole(build_link(c, m, v));
    LinkVerdict verdict;
    if (s < two_pi - tol)
      verdict = LinkVerdict::Fail;
    else if (std::isfinite(s) && std::abs(s - two_pi) <= tol)
      verdict = LinkVerdict::Marginal;
    else
      verdict = LinkVerdict::Pass;
    switch (verdict) {
      case LinkVerdict::Pass: ++report.pass_count; break;
      case LinkVerdict::Marginal: ++report.marginal_count; break;
      case LinkVerdict::Fail: ++report.fail_count; break;
    }
    report.vertices.push_back({v, s, verdict});
  }
  report.nonpositively_curved =
      report.fail_count == 0 && report.marginal_count == 0;
  return report;
}

Cat0Result is_cat0(const Complex2& c, const MetricAssignment& m,
                   const Budgets& budgets, double tol, bool assume_flat_ok) {
  if (!is_connected(c))
    throw Error(ErrorCode::Precondition, "is_cat0 requires a connected complex");
  Cat0Result result;
  result.curvature = check_link_condition(c, m, tol);

  if (result.curvature.fail_count > 0) {
    result.verdict = Verdict::No;
    result.witness_kind = "link-fail";
    for (const auto& pv : result.curvature.vertices)
      if (pv.verdict == LinkVerdict::Fail) {
        result.witness_detail = "vertex " + std::to_string(pv.vertex) +
                                " has link systole " + std::to_string(pv.systole);
        break;
      }
    return result;
  }

  auto ptr = std::make_shared<const Complex2>(c);
  auto full = Subcomplex::full(ptr);
  result.pi1_trivial = is_trivial_group(fundamental_group(full, 0), budgets);

  if (result.pi1_trivial.value == Verdict::No) {
    result.verdict = Verdict::No;
    result.witness_kind = "nontrivial-pi1";
    result.witness_detail = result.pi1_trivial.detail;
    return result;
  }

  bool links_ok = result.curvature.nonpositively_curved ||
                  (assume_flat_ok && result.curvature.fail_count == 0);
  if (links_ok && result.pi1_trivial.value == Verdict::Yes) {
    result.verdict = Verdict::Yes;
    result.witness_kind = "link-condition+simply-connected";
    return result;
  }

  result.verdict = Verdict::Unknown;
  if (!links_ok)
    result.witness_kind = "marginal-links";
  else
    result.witness_kind = "pi1-undecided";
  return result;
}

}  // namespace npc2
