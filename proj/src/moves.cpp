#include "npc2/moves.hpp"

#include <algorithm>
#include <unordered_set>

namespace npc2 {

const char* move_kind_name(MoveKind k) {
  switch (k) {
    case MoveKind::TriangleCollapse: return "triangle_collapse";
    case MoveKind::TriangleExtension: return "triangle_extension";
    case MoveKind::EdgeCollapse: return "edge_collapse";
    default: return "edge_extension";
  }
}

Move Move::triangle_collapse(const Edge& free_edge, const Triangle& t) {
  Move m;
  m.kind = MoveKind::TriangleCollapse;
  m.edge = free_edge;
  m.triangle = t;
  return m;
}

Move Move::triangle_extension(const Edge& glue1, const Edge& glue2) {
  Move m;
  m.kind = MoveKind::TriangleExtension;
  m.edge = glue1;
  m.edge2 = glue2;
  int shared = -1;
  std::vector<int> outer;
  for (int v : {glue1[0], glue1[1]})
    if (v == glue2[0] || v == glue2[1])
      shared = v;
    else
      outer.push_back(v);
  for (int v : {glue2[0], glue2[1]})
    if (v != shared) outer.push_back(v);
  if (shared >= 0 && outer.size() == 2)
    m.triangle = make_triangle(shared, outer[0], outer[1]);
  return m;
}

Move Move::edge_collapse(int free_vertex, const Edge& e) {
  Move m;
  m.kind = MoveKind::EdgeCollapse;
  m.vertex = free_vertex;
  m.edge = e;
  return m;
}

Move Move::edge_extension(int existing_vertex, int new_vertex) {
  Move m;
  m.kind = MoveKind::EdgeExtension;
  m.vertex = new_vertex;
  m.edge = make_edge(existing_vertex, new_vertex);
  return m;
}

std::vector<Move> free_pairs(const Complex2& c) {
  std::vector<Move> out;
  for (std::size_t ei = 0; ei < c.edges().size(); ++ei) {
    std::vector<int> cofaces = c.triangles_of_edge(int(ei));
    if (cofaces.size() == 1)
      out.push_back(Move::triangle_collapse(c.edges()[ei], c.triangles()[cofaces[0]]));
  }
  for (int v : c.vertices()) {
    std::vector<int> edges = c.incident_edges(v);
    if (edges.size() == 1 && c.incident_triangles(v).empty())
      out.push_back(Move::edge_collapse(v, c.edges()[edges[0]]));
  }
  return out;
}

namespace {

template <typename T>
std::vector<T> erase_value(std::vector<T> xs, const T& value) {
  xs.erase(std::remove(xs.begin(), xs.end(), value), xs.end());
  return xs;
}

template <typename T>
std::vector<T> insert_sorted(std::vector<T> xs, const T& value) {
  xs.insert(std::upper_bound(xs.begin(), xs.end(), value), value);
  return xs;
}

}  // namespace

Complex2 apply_move(const Complex2& c, const Move& m) {
  switch (m.kind) {
    case MoveKind::TriangleCollapse: {
      if (c.triangle_index(m.triangle) < 0)
        throw Error(ErrorCode::NotFree, "triangle not present");
      int ei = c.edge_index(m.edge);
      if (ei < 0) throw Error(ErrorCode::NotFree, "edge not present");
      const auto faces = Complex2::triangle_edges(m.triangle);
      if (std::find(faces.begin(), faces.end(), m.edge) == faces.end())
        throw Error(ErrorCode::NotFree, "edge is not a face of the triangle");
      if (c.triangles_of_edge(ei).size() != 1)
        throw Error(ErrorCode::NotFree, "edge lies in more than one triangle");
      return Complex2::from_parts(c.vertices(), erase_value(c.edges(), m.edge),
                                  erase_value(c.triangles(), m.triangle));
    }
    case MoveKind::TriangleExtension: {
      if (c.edge_index(m.edge) < 0 || c.edge_index(m.edge2) < 0)
        throw Error(ErrorCode::InvalidGluing, "glue edge not present");
      if (m.edge == m.edge2)
        throw Error(ErrorCode::InvalidGluing, "glue edges coincide");
      if (m.triangle[0] < 0)
        throw Error(ErrorCode::InvalidGluing, "glue edges share no vertex");
      if (c.triangle_index(m.triangle) >= 0)
        throw Error(ErrorCode::InvalidGluing, "triangle already present");
      std::vector<Edge> edges = c.edges();
      Edge third{-1, -1};
      for (const Edge& e : Complex2::triangle_edges(m.triangle))
        if (e != m.edge && e != m.edge2) third = e;
      if (c.edge_index(third) < 0) edges = insert_sorted(std::move(edges), third);
      return Complex2::from_parts(c.vertices(), std::move(edges),
                                  insert_sorted(c.triangles(), m.triangle));
    }
    case MoveKind::EdgeCollapse: {
      if (!c.has_vertex(m.vertex))
        throw Error(ErrorCode::NotFree, "vertex not present");
      if (c.edge_index(m.edge) < 0) throw Error(ErrorCode::NotFree, "edge not present");
      if (m.edge[0] != m.vertex && m.edge[1] != m.vertex)
        throw Error(ErrorCode::NotFree, "vertex is not an endpoint");
      if (c.incident_edges(m.vertex).size() != 1 ||
          !c.incident_triangles(m.vertex).empty())
        throw Error(ErrorCode::NotFree, "vertex is not free");
      return Complex2::from_parts(erase_value(c.vertices(), m.vertex),
                                  erase_value(c.edges(), m.edge), c.triangles());
    }
    case MoveKind::EdgeExtension: {
      int existing = m.edge[0] == m.vertex ? m.edge[1] : m.edge[0];
      if (!c.has_vertex(existing))
        throw Error(ErrorCode::InvalidGluing, "attachment vertex not present");
      if (c.has_vertex(m.vertex))
        throw Error(ErrorCode::InvalidGluing,
                    "vertex " + std::to_string(m.vertex) + " already present");
      return Complex2::from_parts(insert_sorted(c.vertices(), m.vertex),
                                  insert_sorted(c.edges(), m.edge), c.triangles());
    }
  }
  throw Error(ErrorCode::BadParams, "unknown move kind");
}

CollapseResult is_collapsible(const Complex2& c, std::uint64_t budget_nodes) {
  if (c.empty())
    throw Error(ErrorCode::Precondition, "empty complex");
  if (!is_connected(c))
    throw Error(ErrorCode::Precondition, "complex must be connected");

  CollapseResult result;
  std::unordered_set<std::string> seen;
  std::vector<Move> trail;
  bool exhausted_budget = false;

  // Compact exact encoding of the canonical form, for memoization.
  auto key_of = [](const Complex2& k) {
    std::string key;
    key.reserve(4 * k.size());
    auto put = [&key](int x) {
      key.append(reinterpret_cast<const char*>(&x), sizeof(int));
    };
    for (int v : k.vertices()) put(v);
    put(-1);
    for (const Edge& e : k.edges()) {
      put(e[0]);
      put(e[1]);
    }
    put(-2);
    for (const Triangle& t : k.triangles()) {
      put(t[0]);
      put(t[1]);
      put(t[2]);
    }
    return key;
  };

  // Depth-first search over collapse moves in canonical order. Memoization
  // keys on the canonical forms of intermediate complexes.
  auto dfs = [&](auto&& self, const Complex2& cur) -> bool {
    if (result.visited >= budget_nodes) {
      exhausted_budget = true;
      return false;
    }
    ++result.visited;
    if (cur.size() == 1) return true;
    if (!seen.insert(key_of(cur)).second) return false;
    for (const Move& m : free_pairs(cur)) {
      trail.push_back(m);
      if (self(self, apply_move(cur, m))) return true;
      trail.pop_back();
      if (exhausted_budget) return false;
    }
    return false;
  };

  if (dfs(dfs, c)) {
    result.verdict = Verdict::Yes;
    CollapseCertificate cert;
    cert.moves = trail;
    Complex2 final = c;
    for (const Move& m : trail) final = apply_move(final, m);
    cert.terminal = final.vertices()[0];
    result.certificate = std::move(cert);
  } else {
    result.verdict = exhausted_budget ? Verdict::Unknown : Verdict::No;
  }
  return result;
}

CertificateCheck verify_certificate(const Complex2& c,
                                    const CollapseCertificate& cert) {
  CertificateCheck check;
  Complex2 cur = c;
  for (std::size_t i = 0; i < cert.moves.size(); ++i) {
    try {
      cur = apply_move(cur, cert.moves[i]);
    } catch (const Error& e) {
      check.failed_move = i;
      check.reason = e.what();
      return check;
    }
  }
  if (cur.size() != 1 || cur.vertices()[0] != cert.terminal) {
    check.failed_move = cert.moves.size();
    check.reason = "replay does not end at the terminal vertex";
    return check;
  }
  check.ok = true;
  return check;
}

}  // namespace npc2
