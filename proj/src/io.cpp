#include "npc2/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace npc2 {

using json = nlohmann::json;

std::string format_double(double x) {
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.15g", x);
  return buf;
}

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
}

std::vector<int> int_list(const json& j, const std::string& field) {
  std::vector<int> out;
  if (!j.is_array())
    throw Error(ErrorCode::ParseError, field + " must be an array");
  for (const auto& x : j) {
    if (!x.is_number_integer())
      throw Error(ErrorCode::ParseError, field + " must hold integers");
    out.push_back(x.get<int>());
  }
  return out;
}

template <std::size_t N>
std::vector<std::array<int, N>> tuple_list(const json& j, const std::string& field) {
  std::vector<std::array<int, N>> out;
  if (!j.is_array())
    throw Error(ErrorCode::ParseError, field + " must be an array");
  for (const auto& x : j) {
    if (!x.is_array() || x.size() != N)
      throw Error(ErrorCode::ParseError,
                  field + " entries must be arrays of length " + std::to_string(N));
    std::array<int, N> tup{};
    for (std::size_t i = 0; i < N; ++i) {
      if (!x[i].is_number_integer())
        throw Error(ErrorCode::ParseError, field + " entries must hold integers");
      tup[i] = x[i].get<int>();
    }
    out.push_back(tup);
  }
  return out;
}

Edge parse_edge_key(const std::string& key) {
  auto dash = key.find('-');
  if (dash == std::string::npos || dash == 0 || dash + 1 == key.size())
    throw Error(ErrorCode::ParseError, "length key must look like \"i-j\": " + key);
  try {
    int a = std::stoi(key.substr(0, dash));
    int b = std::stoi(key.substr(dash + 1));
    return make_edge(a, b);
  } catch (const std::exception&) {
    throw Error(ErrorCode::ParseError, "bad length key " + key);
  }
}

json simplex_set_json(const SimplexSet& s) {
  json j;
  j["vertices"] = s.vertices;
  j["edges"] = json::array();
  for (const Edge& e : s.edges) j["edges"].push_back({e[0], e[1]});
  j["triangles"] = json::array();
  for (const Triangle& t : s.triangles) j["triangles"].push_back({t[0], t[1], t[2]});
  return j;
}

json spent_json(const BudgetSpent& s) {
  return json{{"tietze_moves", s.tietze_moves},
              {"cosets", s.cosets},
              {"words_tried", s.words_tried},
              {"nodes_visited", s.nodes_visited}};
}

json tri_verdict_json(const TriVerdict& v) {
  json j;
  j["verdict"] = verdict_name(v.value);
  j["certificate"] = v.certificate;
  j["detail"] = v.detail;
  j["witness_word"] = v.witness_word;
  j["spent"] = spent_json(v.spent);
  return j;
}

json move_json(const Move& m) {
  json j;
  j["kind"] = move_kind_name(m.kind);
  switch (m.kind) {
    case MoveKind::TriangleCollapse:
      j["edge"] = {m.edge[0], m.edge[1]};
      j["triangle"] = {m.triangle[0], m.triangle[1], m.triangle[2]};
      break;
    case MoveKind::TriangleExtension:
      j["glue_edges"] = {{m.edge[0], m.edge[1]}, {m.edge2[0], m.edge2[1]}};
      j["triangle"] = {m.triangle[0], m.triangle[1], m.triangle[2]};
      break;
    case MoveKind::EdgeCollapse:
      j["vertex"] = m.vertex;
      j["edge"] = {m.edge[0], m.edge[1]};
      break;
    case MoveKind::EdgeExtension:
      j["vertex"] = m.vertex;
      j["edge"] = {m.edge[0], m.edge[1]};
      break;
  }
  return j;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace

ParsedComplex parse_complex_text(const std::string& text) {
  json doc = parse_json(text);
  if (!doc.is_object()) throw Error(ErrorCode::ParseError, "document must be an object");

  RawComplex raw;
  if (!doc.contains("vertices"))
    throw Error(ErrorCode::ParseError, "missing field: vertices");
  raw.vertices = int_list(doc["vertices"], "vertices");
  if (doc.contains("edges")) raw.edges = tuple_list<2>(doc["edges"], "edges");
  if (doc.contains("triangles"))
    raw.triangles = tuple_list<3>(doc["triangles"], "triangles");

  // Triangle faces are implied; add then dedupe.
  for (const auto& t : raw.triangles) {
    if (t[0] == t[1] || t[0] == t[2] || t[1] == t[2]) continue;  // validate reports it
    Triangle tt = make_triangle(t[0], t[1], t[2]);
    for (const Edge& e : Complex2::triangle_edges(tt)) raw.edges.push_back({e[0], e[1]});
  }
  std::vector<Edge> canon;
  for (const auto& e : raw.edges)
    canon.push_back(e[0] == e[1] ? Edge{e[0], e[1]} : make_edge(e[0], e[1]));
  std::sort(canon.begin(), canon.end());
  canon.erase(std::unique(canon.begin(), canon.end()), canon.end());
  raw.edges.clear();
  for (const Edge& e : canon) raw.edges.push_back({e[0], e[1]});

  ValidationResult vr = validate(raw);
  if (!vr.ok()) {
    std::string detail;
    for (const Diagnostic& d : vr.diagnostics) {
      if (!detail.empty()) detail += "; ";
      detail += std::string(error_code_name(d.code)) + ": " + d.detail;
    }
    throw Error(ErrorCode::ValidationError, detail);
  }

  ParsedComplex out;
  out.complex = std::make_shared<const Complex2>(*vr.complex);
  if (doc.contains("metadata") && doc["metadata"].contains("name"))
    out.name = doc["metadata"]["name"].get<std::string>();

  std::map<Edge, double> lengths;
  if (doc.contains("lengths")) {
    if (!doc["lengths"].is_object())
      throw Error(ErrorCode::ParseError, "lengths must be an object");
    for (const auto& [key, value] : doc["lengths"].items()) {
      if (!value.is_number())
        throw Error(ErrorCode::ParseError, "length of " + key + " must be a number");
      lengths[parse_edge_key(key)] = value.get<double>();
    }
    out.metric_specified = !lengths.empty();
  }
  try {
    out.metric = MetricAssignment::from_map(*out.complex, lengths);
  } catch (const Error& e) {
    throw Error(ErrorCode::ValidationError, e.what());
  }
  return out;
}

ParsedComplex parse_complex_file(const std::string& path) {
  return parse_complex_text(read_file(path));
}

Subcomplex parse_subcomplex_text(const std::string& text,
                                 const std::shared_ptr<const Complex2>& parent) {
  json doc = parse_json(text);
  if (!doc.is_object()) throw Error(ErrorCode::ParseError, "document must be an object");
  const Complex2& p = *parent;
  BitMask v(p.vertices().size()), e(p.edges().size()), t(p.triangles().size());
  if (doc.contains("vertices"))
    for (int vid : int_list(doc["vertices"], "vertices")) {
      int i = p.vertex_index(vid);
      if (i < 0)
        throw Error(ErrorCode::UnknownSimplex, "vertex " + std::to_string(vid));
      v.set(i);
    }
  if (doc.contains("edges"))
    for (const auto& pair : tuple_list<2>(doc["edges"], "edges")) {
      int i = p.edge_index(make_edge(pair[0], pair[1]));
      if (i < 0)
        throw Error(ErrorCode::UnknownSimplex, "edge " + std::to_string(pair[0]) +
                                                   "-" + std::to_string(pair[1]));
      e.set(i);
    }
  if (doc.contains("triangles"))
    for (const auto& tri : tuple_list<3>(doc["triangles"], "triangles")) {
      int i = p.triangle_index(make_triangle(tri[0], tri[1], tri[2]));
      if (i < 0) throw Error(ErrorCode::UnknownSimplex, "triangle not in parent");
      t.set(i);
    }
  return Subcomplex(parent, std::move(v), std::move(e), std::move(t));
}

Subcomplex parse_subcomplex_file(const std::string& path,
                                 const std::shared_ptr<const Complex2>& parent) {
  return parse_subcomplex_text(read_file(path), parent);
}

std::string emit_complex(const Complex2& c, const MetricAssignment& m,
                         const std::string& name, Format format) {
  if (format == Format::Machine) {
    json j;
    if (!name.empty()) j["metadata"] = {{"name", name}};
    j["vertices"] = c.vertices();
    j["edges"] = json::array();
    for (const Edge& e : c.edges()) j["edges"].push_back({e[0], e[1]});
    j["triangles"] = json::array();
    for (const Triangle& t : c.triangles()) j["triangles"].push_back({t[0], t[1], t[2]});
    json lengths = json::object();
    for (std::size_t i = 0; i < c.edges().size(); ++i)
      if (m.lengths[i] != 1.0) {
        const Edge& e = c.edges()[i];
        lengths[std::to_string(e[0]) + "-" + std::to_string(e[1])] = m.lengths[i];
      }
    if (!lengths.empty()) j["lengths"] = lengths;
    return dump(j);
  }
  std::ostringstream out;
  out << "complex " << (name.empty() ? "(unnamed)" : name) << ": "
      << c.vertices().size() << " vertices, " << c.edges().size() << " edges, "
      << c.triangles().size() << " triangles\n";
  return out.str();
}

std::string emit_validation(const ValidationResult& r, Format format) {
  if (format == Format::Machine) {
    json j;
    j["schema_version"] = kSchemaVersion;
    j["kind"] = "validation";
    j["ok"] = r.ok();
    j["diagnostics"] = json::array();
    for (const Diagnostic& d : r.diagnostics)
      j["diagnostics"].push_back({{"code", error_code_name(d.code)}, {"detail", d.detail}});
    return dump(j);
  }
  std::ostringstream out;
  if (r.ok()) {
    out << "valid: " << r.complex->vertices().size() << " vertices, "
        << r.complex->edges().size() << " edges, " << r.complex->triangles().size()
        << " triangles\n";
  } else {
    out << "invalid: " << r.diagnostics.size() << " problem(s)\n";
    for (const Diagnostic& d : r.diagnostics)
      out << "  " << error_code_name(d.code) << ": " << d.detail << "\n";
  }
  return out.str();
}

std::string emit_curvature(const CurvatureReport& r, const std::string& metric_note,
                           Format format) {
  if (format == Format::Machine) {
    json j;
    j["schema_version"] = kSchemaVersion;
    j["kind"] = "curvature";
    j["tolerance"] = format_double(r.tolerance);
    j["metric"] = metric_note;
    j["vertices"] = json::array();
    for (const auto& pv : r.vertices)
      j["vertices"].push_back({{"vertex", pv.vertex},
                               {"systole", format_double(pv.systole)},
                               {"verdict", link_verdict_name(pv.verdict)}});
    j["overall"] = {{"nonpositively_curved", r.nonpositively_curved},
                    {"pass", r.pass_count},
                    {"marginal", r.marginal_count},
                    {"fail", r.fail_count}};
    return dump(j);
  }
  std::ostringstream out;
  out << "link condition report (tolerance " << format_double(r.tolerance)
      << ", metric: " << metric_note << ")\n";
  for (const auto& pv : r.vertices)
    out << "  vertex " << pv.vertex << ": systole " << format_double(pv.systole)
        << "  " << link_verdict_name(pv.verdict) << "\n";
  out << "overall: "
      << (r.nonpositively_curved ? "nonpositively curved" : "NOT nonpositively curved")
      << " (" << r.fail_count << " FAIL, " << r.marginal_count << " MARGINAL, "
      << r.pass_count << " PASS)\n";
  return out.str();
}

std::string emit_homology(const HomologyResult& r, Format format) {
  if (format == Format::Machine) {
    json j;
    j["schema_version"] = kSchemaVersion;
    j["kind"] = "homology";
    j["betti"] = {r.betti[0], r.betti[1], r.betti[2]};
    j["torsion_h0"] = json::array();
    for (const Integer& d : r.torsion_h0) j["torsion_h0"].push_back(d.str());
    j["torsion_h1"] = json::array();
    for (const Integer& d : r.torsion_h1) j["torsion_h1"].push_back(d.str());
    return dump(j);
  }
  std::ostringstream out;
  out << "homology: b0=" << r.betti[0] << " b1=" << r.betti[1] << " b2=" << r.betti[2];
  if (!r.torsion_h1.empty()) {
    out << ", H1 torsion:";
    for (const Integer& d : r.torsion_h1) out << " Z/" << d.str();
  }
  out << "\n";
  return out.str();
}

std::string emit_pi1(const Pi1Report& r, Format format) {
  if (format == Format::Machine) {
    json j;
    j["schema_version"] = kSchemaVersion;
    j["kind"] = "pi1";
    j["components"] = json::array();
    for (std::size_t i = 0; i < r.presentations.size(); ++i) {
      const GroupPresentation& p = r.presentations[i];
      json comp;
      comp["basepoint"] = p.origin ? p.origin->basepoint : -1;
      comp["generators"] = p.generator_count;
      if (p.origin) {
        comp["generator_edges"] = json::array();
        for (const Edge& e : p.origin->generator_edges)
          comp["generator_edges"].push_back({e[0], e[1]});
      }
      comp["relators"] = json::array();
      comp["relator_words"] = json::array();
      for (const Word& w : p.relators) {
        comp["relators"].push_back(w);
        comp["relator_words"].push_back(word_to_string(w));
      }
      comp["abelianization"] = {{"free_rank", r.abelianizations[i].free_rank},
                                {"torsion", json::array()}};
      for (const Integer& d : r.abelianizations[i].torsion)
        comp["abelianization"]["torsion"].push_back(d.str());
      comp["trivial"] = tri_verdict_json(r.trivial[i]);
      j["components"].push_back(comp);
    }
    return dump(j);
  }
  std::ostringstream out;
  for (std::size_t i = 0; i < r.presentations.size(); ++i) {
    const GroupPresentation& p = r.presentations[i];
    out << "component " << i;
    if (p.origin) out << " (basepoint " << p.origin->basepoint << ")";
    out << ": pi1 = < " << p.generator_count << " generator(s) |";
    for (const Word& w : p.relators) out << " " << word_to_string(w);
    out << " >\n";
    out << "  abelianization: " << r.abelianizations[i].to_string() << "\n";
    out << "  trivial: " << verdict_name(r.trivial[i].value);
    if (!r.trivial[i].certificate.empty())
      out << " (" << r.trivial[i].certificate << ")";
    out << "\n";
  }
  if (r.presentations.empty()) out << "no components\n";
  return out.str();
}

std::string emit_collapse(const CollapseResult& r, std::uint64_t budget,
                          Format format) {
  if (format == Format::Machine) {
    json j;
    j["schema_version"] = kSchemaVersion;
    j["kind"] = "collapse";
    j["verdict"] = verdict_name(r.verdict);
    j["visited"] = r.visited;
    j["budget"] = budget;
    if (r.certificate) {
      json cert;
      cert["terminal"] = r.certificate->terminal;
      cert["moves"] = json::array();
      for (const Move& m : r.certificate->moves) cert["moves"].push_back(move_json(m));
      j["certificate"] = cert;
    }
    return dump(j);
  }
  std::ostringstream out;
  out << "collapsible: " << verdict_name(r.verdict) << " (" << r.visited
      << " complexes visited, budget " << budget << ")\n";
  if (r.certificate) {
    out << "certificate: " << r.certificate->moves.size()
        << " move(s), terminal vertex " << r.certificate->terminal << "\n";
    for (const Move& m : r.certificate->moves) {
      out << "  " << move_kind_name(m.kind);
      if (m.kind == MoveKind::TriangleCollapse)
        out << " edge " << m.edge[0] << "-" << m.edge[1] << " triangle {"
            << m.triangle[0] << "," << m.triangle[1] << "," << m.triangle[2] << "}";
      else if (m.kind == MoveKind::EdgeCollapse)
        out << " vertex " << m.vertex << " edge " << m.edge[0] << "-" << m.edge[1];
      out << "\n";
    }
  }
  return out.str();
}

std::string emit_cat0(const Cat0Result& r, Format format) {
  if (format == Format::Machine) {
    json j;
    j["schema_version"] = kSchemaVersion;
    j["kind"] = "cat0";
    j["verdict"] = verdict_name(r.verdict);
    j["witness_kind"] = r.witness_kind;
    j["witness_detail"] = r.witness_detail;
    j["curvature"] = {{"nonpositively_curved", r.curvature.nonpositively_curved},
                      {"pass", r.curvature.pass_count},
                      {"marginal", r.curvature.marginal_count},
                      {"fail", r.curvature.fail_count},
                      {"tolerance", format_double(r.curvature.tolerance)}};
    j["pi1_trivial"] = tri_verdict_json(r.pi1_trivial);
    return dump(j);
  }
  std::ostringstream out;
  out << "CAT(0): " << verdict_name(r.verdict);
  if (!r.witness_kind.empty()) out << " [" << r.witness_kind << "]";
  if (!r.witness_detail.empty()) out << " " << r.witness_detail;
  out << "\n";
  return out.str();
}

std::string emit_scan(const ScanReport& r, Format format) {
  if (format == Format::Machine) {
    json j;
    j["schema_version"] = kSchemaVersion;
    j["kind"] = "scan";
    j["verdict"] = scan_outcome_name(r.verdict);
    j["pairs_tested"] = r.pairs_tested;
    j["violations"] = json::array();
    for (const ScanViolation& v : r.violations) {
      json jv;
      jv["y"] = simplex_set_json(v.y);
      jv["z"] = simplex_set_json(v.z);
      jv["component"] = {{"basepoint", v.component.basepoint},
                         {"witness_word", v.component.witness_word},
                         {"witness_word_text", word_to_string(v.component.witness_word)},
                         {"witness_loop", v.component.witness_loop},
                         {"sub_nontrivial_by", v.component.sub_nontrivial_by},
                         {"ambient_trivial_by", v.component.ambient_trivial_by},
                         {"detail", v.component.verdict.detail}};
      j["violations"].push_back(jv);
    }
    j["unknowns"] = json::array();
    for (const ScanUnknown& u : r.unknowns) {
      json ju;
      ju["y"] = simplex_set_json(u.y);
      ju["z"] = simplex_set_json(u.z);
      ju["basepoint"] = u.basepoint;
      ju["spent"] = spent_json(u.spent);
      j["unknowns"].push_back(ju);
    }
    j["y_candidates"] = r.y_candidates;
    j["z_candidates"] = r.z_candidates;
    j["skipped"] = {{"y_pi1_unknown", r.y_skipped_pi1_unknown},
                    {"y_not_injective", r.y_skipped_not_injective}};
    j["truncated"] = {{"y", r.y_enumeration_truncated}, {"z", r.z_enumeration_truncated}};
    const auto unlimited = std::numeric_limits<std::size_t>::max();
    json caps;
    caps["max_y_size"] =
        r.config.max_y_size == unlimited ? json(nullptr) : json(r.config.max_y_size);
    caps["max_z_size"] =
        r.config.max_z_size == unlimited ? json(nullptr) : json(r.config.max_z_size);
    j["config"] = {{"caps", caps},
                   {"require_y_pi1_injective", r.config.require_y_pi1_injective},
                   {"filter", r.config.filter == SubcomplexFilter::Connected
                                  ? "connected"
                                  : "all"},
                   {"budgets",
                    {{"tietze_moves", r.config.budgets.tietze_moves},
                     {"max_cosets", r.config.budgets.max_cosets},
                     {"witness_word_length", r.config.budgets.witness_word_length},
                     {"collapse_nodes", r.config.budgets.collapse_nodes}}}};
    j["budget_spent"] = spent_json(r.spent);
    j["violations_verified"] = r.violations_verified;
    return dump(j);
  }
  std::ostringstream out;
  out << "scan verdict: " << scan_outcome_name(r.verdict) << "\n";
  out << "  pairs tested: " << r.pairs_tested << " (" << r.y_candidates
      << " Y candidates x " << r.z_candidates << " Z candidates)\n";
  if (r.y_skipped_pi1_unknown || r.y_skipped_not_injective)
    out << "  Y skipped: " << r.y_skipped_not_injective << " not pi1-injective, "
        << r.y_skipped_pi1_unknown << " undecided\n";
  if (r.y_enumeration_truncated || r.z_enumeration_truncated)
    out << "  NOTE: size caps pruned the enumeration; the scan is partial\n";
  for (const ScanViolation& v : r.violations) {
    out << "  VIOLATION at basepoint " << v.component.basepoint << ": loop "
        << word_to_string(v.component.witness_word) << " via";
    for (int x : v.component.witness_loop) out << " " << x;
    out << " (" << v.component.sub_nontrivial_by << " / "
        << v.component.ambient_trivial_by << ")\n";
  }
  for (const ScanUnknown& u : r.unknowns)
    out << "  UNKNOWN at basepoint " << u.basepoint << "\n";
  if (!r.violations.empty())
    out << "  witness replay: " << (r.violations_verified ? "verified" : "FAILED")
        << "\n";
  return out.str();
}

}  // namespace npc2
