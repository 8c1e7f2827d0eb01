// Complex/subcomplex file parsing and report serialization. The machine
// format is JSON with a declared schema version; floating-point values are
// rendered to 15 significant digits, byte-stable for identical inputs.
#pragma once

#include <memory>
#include <string>

#include "npc2/complex.hpp"
#include "npc2/group.hpp"
#include "npc2/harness.hpp"
#include "npc2/homology.hpp"
#include "npc2/metric.hpp"
#include "npc2/moves.hpp"

namespace npc2 {

enum class Format { Human, Machine };

inline constexpr int kSchemaVersion = 1;

struct ParsedComplex {
  std::shared_ptr<const Complex2> complex;
  MetricAssignment metric;
  std::string name;
  bool metric_specified = false;
};

/// Parses a complex document: vertices, triangles, optional edges (triangle
/// faces are implied), optional lengths keyed "i-j", optional metadata.
ParsedComplex parse_complex_text(const std::string& text);
ParsedComplex parse_complex_file(const std::string& path);

/// Parses a subcomplex mask document against a parent; the mask must be
/// face-closed and contained in the parent.
Subcomplex parse_subcomplex_text(const std::string& text,
                                 const std::shared_ptr<const Complex2>& parent);
Subcomplex parse_subcomplex_file(const std::string& path,
                                 const std::shared_ptr<const Complex2>& parent);

std::string emit_complex(const Complex2& c, const MetricAssignment& m,
                         const std::string& name, Format format);
std::string emit_validation(const ValidationResult& r, Format format);
std::string emit_curvature(const CurvatureReport& r, const std::string& metric_note,
                           Format format);
std::string emit_homology(const HomologyResult& r, Format format);
struct Pi1Report {
  std::vector<GroupPresentation> presentations;
  std::vector<AbelianInvariants> abelianizations;
  std::vector<TriVerdict> trivial;
};
std::string emit_pi1(const Pi1Report& r, Format format);
std::string emit_collapse(const CollapseResult& r, std::uint64_t budget,
                          Format format);
std::string emit_cat0(const Cat0Result& r, Format format);
std::string emit_scan(const ScanReport& r, Format format);

/// %.15g rendering used for every floating value in reports.
std::string format_double(double x);

}  // namespace npc2
