// Python bindings for the main npc2 operations.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "npc2/harness.hpp"
#include "npc2/homology.hpp"
#include "npc2/io.hpp"
#include "npc2/moves.hpp"

namespace py = pybind11;
using namespace npc2;

namespace {

using ComplexPtr = std::shared_ptr<Complex2>;  // pybind holder (const use internal)

ComplexPtr build_complex(const std::vector<int>& vertices,
                         const std::vector<std::array<int, 2>>& edges,
                         const std::vector<std::array<int, 3>>& triangles) {
  RawComplex raw{vertices, edges, triangles};
  ValidationResult vr = validate(raw);
  if (!vr.ok()) {
    std::string msg;
    for (const Diagnostic& d : vr.diagnostics) {
      if (!msg.empty()) msg += "; ";
      msg += std::string(error_code_name(d.code)) + ": " + d.detail;
    }
    throw Error(ErrorCode::ValidationError, msg);
  }
  return std::make_shared<Complex2>(std::move(*vr.complex));
}

MetricAssignment metric_from(const ComplexPtr& c,
                             const std::map<std::pair<int, int>, double>& lengths) {
  std::map<Edge, double> given;
  for (const auto& [key, len] : lengths)
    given[make_edge(key.first, key.second)] = len;
  return MetricAssignment::from_map(*c, given);
}

py::dict curvature_dict(const CurvatureReport& r) {
  py::dict out;
  py::list vertices;
  for (const auto& pv : r.vertices) {
    py::dict v;
    v["vertex"] = pv.vertex;
    v["systole"] = pv.systole;
    v["verdict"] = link_verdict_name(pv.verdict);
    vertices.append(v);
  }
  out["vertices"] = vertices;
  out["tolerance"] = r.tolerance;
  out["nonpositively_curved"] = r.nonpositively_curved;
  out["pass"] = r.pass_count;
  out["marginal"] = r.marginal_count;
  out["fail"] = r.fail_count;
  return out;
}

py::dict homology_dict(const HomologyResult& h) {
  py::dict out;
  out["betti"] = py::make_tuple(h.betti[0], h.betti[1], h.betti[2]);
  py::list torsion;
  for (const Integer& d : h.torsion_h1) torsion.append(d.str());
  out["torsion_h1"] = torsion;
  return out;
}

py::dict verdict_dict(const TriVerdict& v) {
  py::dict out;
  out["verdict"] = verdict_name(v.value);
  out["certificate"] = v.certificate;
  out["detail"] = v.detail;
  out["witness_word"] = v.witness_word;
  return out;
}

}  // namespace

PYBIND11_MODULE(_npc2, m) {
  m.doc() = "nonpositive curvature, collapsibility and strong pi1-injectivity "
            "for finite 2-complexes";

  py::register_exception<Error>(m, "Npc2Error");

  py::class_<Complex2, std::shared_ptr<Complex2>>(m, "Complex2")
      .def_property_readonly("vertices",
                             [](const Complex2& c) { return c.vertices(); })
      .def_property_readonly("edges",
                             [](const Complex2& c) { return c.edges(); })
      .def_property_readonly("triangles",
                             [](const Complex2& c) { return c.triangles(); })
      .def("__eq__", [](const Complex2& a, const Complex2& b) { return a == b; })
      .def("__len__", [](const Complex2& c) { return c.size(); })
      .def("__repr__", [](const Complex2& c) {
        return "Complex2(" + std::to_string(c.vertices().size()) + "v, " +
               std::to_string(c.edges().size()) + "e, " +
               std::to_string(c.triangles().size()) + "t)";
      });

  m.def("complex", &build_complex, py::arg("vertices"),
        py::arg("edges") = std::vector<std::array<int, 2>>{},
        py::arg("triangles") = std::vector<std::array<int, 3>>{},
        "validate and build a 2-complex");

  m.def("generate", [](const std::string& name, const std::map<std::string, long>& params) {
    return std::make_shared<Complex2>(generate(name, params).complex);
  }, py::arg("name"), py::arg("params") = std::map<std::string, long>{},
     "builtin generators: triangle, octahedron, disk_grid, torus_grid, cone, path");

  m.def("parse_complex", [](const std::string& text) {
    return std::make_shared<Complex2>(*parse_complex_text(text).complex);
  });

  m.def("homology", [](const ComplexPtr& c) {
    return homology_dict(homology(Subcomplex::full(c)));
  }, "betti numbers and H1 torsion of a complex");

  m.def("check_link_condition",
        [](const ComplexPtr& c, const std::map<std::pair<int, int>, double>& lengths,
           double tol) {
          MetricAssignment metric = lengths.empty() ? MetricAssignment::unit(*c)
                                                    : metric_from(c, lengths);
          return curvature_dict(check_link_condition(*c, metric, tol));
        },
        py::arg("complex"),
        py::arg("lengths") = std::map<std::pair<int, int>, double>{},
        py::arg("tol") = kDefaultTolerance);

  m.def("is_cat0",
        [](const ComplexPtr& c, const std::map<std::pair<int, int>, double>& lengths,
           double tol, bool assume_flat_ok) {
          MetricAssignment metric = lengths.empty() ? MetricAssignment::unit(*c)
                                                    : metric_from(c, lengths);
          Cat0Result r = is_cat0(*c, metric, Budgets{}, tol, assume_flat_ok);
          py::dict out;
          out["verdict"] = verdict_name(r.verdict);
          out["witness_kind"] = r.witness_kind;
          out["witness_detail"] = r.witness_detail;
          return out;
        },
        py::arg("complex"),
        py::arg("lengths") = std::map<std::pair<int, int>, double>{},
        py::arg("tol") = kDefaultTolerance, py::arg("assume_flat_ok") = false);

  m.def("pi1_trivial", [](const ComplexPtr& c) {
    py::list out;
    Subcomplex full = Subcomplex::full(c);
    for (const GroupPresentation& p : fundamental_groups(full))
      out.append(verdict_dict(is_trivial_group(p, Budgets{})));
    return out;
  }, "triviality verdict of pi1 per connected component");

  m.def("is_collapsible", [](const ComplexPtr& c, std::uint64_t budget) {
    CollapseResult r = is_collapsible(*c, budget);
    py::dict out;
    out["verdict"] = verdict_name(r.verdict);
    out["visited"] = r.visited;
    if (r.certificate) {
      py::list moves;
      for (const Move& mv : r.certificate->moves) {
        py::dict mj;
        mj["kind"] = move_kind_name(mv.kind);
        mj["edge"] = py::make_tuple(mv.edge[0], mv.edge[1]);
        if (mv.kind == MoveKind::TriangleCollapse)
          mj["triangle"] = py::make_tuple(mv.triangle[0], mv.triangle[1], mv.triangle[2]);
        if (mv.kind == MoveKind::EdgeCollapse) mj["vertex"] = mv.vertex;
        moves.append(mj);
      }
      out["moves"] = moves;
      out["terminal"] = r.certificate->terminal;
    }
    return out;
  }, py::arg("complex"), py::arg("budget") = Budgets{}.collapse_nodes);

  m.def("strong_injectivity_scan",
        [](const ComplexPtr& c, std::size_t max_y, std::size_t max_z, int threads) {
          ScanConfig cfg;
          cfg.max_y_size = max_y;
          cfg.max_z_size = max_z;
          cfg.threads = threads;
          ScanReport r = strong_injectivity_scan(c, cfg);
          py::dict out;
          out["verdict"] = scan_outcome_name(r.verdict);
          out["pairs_tested"] = r.pairs_tested;
          out["violations"] = int(r.violations.size());
          out["unknowns"] = int(r.unknowns.size());
          out["report_json"] = emit_scan(r, Format::Machine);
          return out;
        },
        py::arg("complex"),
        py::arg("max_y") = std::numeric_limits<std::size_t>::max(),
        py::arg("max_z") = std::numeric_limits<std::size_t>::max(),
        py::arg("threads") = 1);

  m.def("systole", &graph_systole, py::arg("nodes"), py::arg("arcs"),
        "shortest simple cycle length of a weighted multigraph");

  m.attr("__version__") = "1.0.0";
}
