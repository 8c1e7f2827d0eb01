#include "npc2/homology.hpp"

namespace npc2 {

ChainComplexData boundary_matrices(const Subcomplex& s) {
  const Complex2& p = s.parent();
  const std::vector<int> vidx = s.vertex_mask().indices();
  const std::vector<int> eidx = s.edge_mask().indices();
  const std::vector<int> tidx = s.triangle_mask().indices();

  // Local positions within the subcomplex, in parent canonical order.
  std::vector<int> vpos(p.vertices().size(), -1), epos(p.edges().size(), -1);
  for (std::size_t i = 0; i < vidx.size(); ++i) vpos[vidx[i]] = int(i);
  for (std::size_t i = 0; i < eidx.size(); ++i) epos[eidx[i]] = int(i);

  ChainComplexData data;
  data.d1 = IntMatrix(vidx.size(), eidx.size());
  for (std::size_t j = 0; j < eidx.size(); ++j) {
    const Edge& e = p.edges()[eidx[j]];
    data.d1.at(vpos[p.vertex_index(e[1])], j) = 1;
    data.d1.at(vpos[p.vertex_index(e[0])], j) = -1;
  }
  data.d2 = IntMatrix(eidx.size(), tidx.size());
  for (std::size_t j = 0; j < tidx.size(); ++j) {
    const Triangle& t = p.triangles()[tidx[j]];
    data.d2.at(epos[p.edge_index(Edge{t[1], t[2]})], j) = 1;
    data.d2.at(epos[p.edge_index(Edge{t[0], t[2]})], j) = -1;
    data.d2.at(epos[p.edge_index(Edge{t[0], t[1]})], j) = 1;
  }
  return data;
}

HomologyResult homology(const Subcomplex& s) {
  ChainComplexData data = boundary_matrices(s);
  SmithResult s1 = smith_normal_form(data.d1);
  SmithResult s2 = smith_normal_form(data.d2);

  const long nv = long(data.d1.rows);
  const long ne = long(data.d1.cols);
  const long nt = long(data.d2.cols);
  const long r1 = long(s1.rank);
  const long r2 = long(s2.rank);

  HomologyResult h;
  h.betti = {nv - r1, ne - r1 - r2, nt - r2};
  for (const Integer& d : s1.invariant_factors)
    if (d > 1) h.torsion_h0.push_back(d);
  for (const Integer& d : s2.invariant_factors)
    if (d > 1) h.torsion_h1.push_back(d);
  return h;
}

}  // namespace npc2
