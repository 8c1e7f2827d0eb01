// Finite 2-dimensional simplicial complexes: canonical storage, validation,
// face-closed subcomplex masks and their set algebra, connectivity, stars,
// links and combinatorial balls.
#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "npc2/error.hpp"

namespace npc2 {

using Edge = std::array<int, 2>;      // stored min < max
using Triangle = std::array<int, 3>;  // stored strictly increasing

Edge make_edge(int a, int b);
Triangle make_triangle(int a, int b, int c);

/// Unvalidated complex description, as read from user input.
struct RawComplex {
  std::vector<int> vertices;
  std::vector<std::array<int, 2>> edges;
  std::vector<std::array<int, 3>> triangles;
};

struct Diagnostic {
  ErrorCode code;
  std::string detail;
};

/// Immutable 2-complex. Simplices are kept sorted and unique so that equality,
/// hashing and all downstream enumeration orders are deterministic.
class Complex2 {
 public:
  Complex2() = default;

  /// Builds from canonical parts. Throws Error(ValidationError) if the parts
  /// are not sorted/unique/face-closed; intended for internal construction.
  static Complex2 from_parts(std::vector<int> vertices, std::vector<Edge> edges,
                             std::vector<Triangle> triangles);

  const std::vector<int>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<Triangle>& triangles() const { return triangles_; }

  std::size_t size() const {
    return vertices_.size() + edges_.size() + triangles_.size();
  }
  bool empty() const { return vertices_.empty(); }

  bool has_vertex(int v) const { return vertex_index(v) >= 0; }
  int vertex_index(int v) const;          // -1 when absent
  int edge_index(const Edge& e) const;    // -1 when absent
  int triangle_index(const Triangle& t) const;

  /// The three edges of a triangle, in canonical order.
  static std::array<Edge, 3> triangle_edges(const Triangle& t);

  /// Edge indices incident to vertex v, ascending.
  std::vector<int> incident_edges(int v) const;
  /// Triangle indices incident to vertex v, ascending.
  std::vector<int> incident_triangles(int v) const;
  /// Triangle indices containing edge index e, ascending.
  std::vector<int> triangles_of_edge(int e) const;

  bool operator==(const Complex2&) const = default;
  std::uint64_t hash() const;

 private:
  std::vector<int> vertices_;
  std::vector<Edge> edges_;
  std::vector<Triangle> triangles_;
};

struct ValidationResult {
  std::optional<Complex2> complex;
  std::vector<Diagnostic> diagnostics;
  bool ok() const { return complex.has_value(); }
};

/// Checks closure, simpliciality and id sanity. Returns either the canonical
/// complex or the complete list of violations.
ValidationResult validate(const RawComplex& raw);

/// Fixed-size bitmask over a parent's simplex index range.
class BitMask {
 public:
  BitMask() = default;
  explicit BitMask(std::size_t n) : n_(n), words_((n + 63) / 64, 0) {}

  std::size_t size() const { return n_; }
  bool test(std::size_t i) const {
    return (words_[i / 64] >> (i % 64)) & 1u;
  }
  void set(std::size_t i) { words_[i / 64] |= std::uint64_t(1) << (i % 64); }
  void reset(std::size_t i) { words_[i / 64] &= ~(std::uint64_t(1) << (i % 64)); }
  std::size_t count() const;
  bool any() const;
  bool is_subset_of(const BitMask& other) const;
  std::vector<int> indices() const;

  BitMask operator&(const BitMask& other) const;
  BitMask operator|(const BitMask& other) const;
  bool operator==(const BitMask&) const = default;

  std::uint64_t hash() const;

 private:
  std::size_t n_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Selection of simplices given by explicit lists (used to seed closures and
/// to describe subcomplexes in files and reports).
struct SimplexSet {
  std::vector<int> vertices;
  std::vector<Edge> edges;
  std::vector<Triangle> triangles;
};

/// Face-closed subset of a parent complex. Immutable; the closure invariant
/// is checked at construction.
class Subcomplex {
 public:
  Subcomplex(std::shared_ptr<const Complex2> parent, BitMask vertices,
             BitMask edges, BitMask triangles);

  static Subcomplex full(std::shared_ptr<const Complex2> parent);
  static Subcomplex empty_of(std::shared_ptr<const Complex2> parent);

  const Complex2& parent() const { return *parent_; }
  const std::shared_ptr<const Complex2>& parent_ptr() const { return parent_; }

  const BitMask& vertex_mask() const { return vmask_; }
  const BitMask& edge_mask() const { return emask_; }
  const BitMask& triangle_mask() const { return tmask_; }

  std::size_t size() const {
    return vmask_.count() + emask_.count() + tmask_.count();
  }
  bool is_empty() const { return !vmask_.any(); }
  /// -1 for the empty subcomplex, else the top dimension present.
  int dimension() const;

  bool has_vertex_index(int i) const { return vmask_.test(i); }
  std::vector<int> vertex_ids() const;
  std::vector<Edge> edge_list() const;
  std::vector<Triangle> triangle_list() const;
  SimplexSet simplex_set() const;

  /// other ⊆ this (requires same parent).
  bool contains(const Subcomplex& other) const;
  bool same_parent(const Subcomplex& other) const;

  /// Copies the selected simplices into a standalone complex.
  Complex2 materialize() const;

  bool operator==(const Subcomplex& other) const;

 private:
  std::shared_ptr<const Complex2> parent_;
  BitMask vmask_, emask_, tmask_;
};

/// Smallest face-closed subcomplex of parent containing the seeds.
/// Throws Error(UnknownSimplex) when a seed is not a parent simplex.
Subcomplex closure(const std::shared_ptr<const Complex2>& parent,
                   const SimplexSet& seeds);

Subcomplex intersect(const Subcomplex& a, const Subcomplex& b);
Subcomplex unite(const Subcomplex& a, const Subcomplex& b);

/// Unweighted shadow of the vertex link: one node per incident edge, one arc
/// per incident triangle.
struct CombinatorialLink {
  int vertex = -1;
  std::vector<Edge> node_edges;                 // incident edges, canonical order
  std::vector<std::array<int, 2>> arcs;         // node index pairs
  std::vector<Triangle> arc_triangles;          // arc i comes from this triangle
};

std::pair<Subcomplex, CombinatorialLink> star_and_link(
    const std::shared_ptr<const Complex2>& c, int v);

struct ComponentDecomposition {
  std::vector<Subcomplex> components;  // ordered by basepoint
  std::vector<int> basepoints;         // minimal vertex id per component
  std::size_t count() const { return components.size(); }
};

ComponentDecomposition connected_components(const Subcomplex& s);

/// True when every simplex is joined to every other by a vertex-edge path.
bool is_connected(const Subcomplex& s);
bool is_connected(const Complex2& c);

/// Closure of all simplices whose vertices lie within edge-path distance r
/// of v. Throws Error(UnknownVertex) when v is not in c.
Subcomplex combinatorial_ball(const std::shared_ptr<const Complex2>& c, int v,
                              int r);

}  // namespace npc2
