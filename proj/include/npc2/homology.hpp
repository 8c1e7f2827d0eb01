// Simplicial chain complexes and integer homology of subcomplexes.
#pragma once

#include <array>
#include <string>

#include "npc2/complex.hpp"
#include "npc2/snf.hpp"

namespace npc2 {

/// Boundary matrices under the fixed orientation convention: a triangle
/// (v0 < v1 < v2) maps to +[v1v2] - [v0v2] + [v0v1]; an edge (v0 < v1) maps
/// to v1 - v0. Columns index the higher simplex, rows the face.
struct ChainComplexData {
  IntMatrix d2;  // edges x triangles
  IntMatrix d1;  // vertices x edges
  std::string orientation = "sorted-vertex-order";
};

ChainComplexData boundary_matrices(const Subcomplex& s);

struct HomologyResult {
  std::array<long, 3> betti{0, 0, 0};
  std::vector<Integer> torsion_h0;  // invariant factors > 1 (always empty here)
  std::vector<Integer> torsion_h1;
  bool torsion_free() const { return torsion_h0.empty() && torsion_h1.empty(); }
};

HomologyResult homology(const Subcomplex& s);

}  // namespace npc2
