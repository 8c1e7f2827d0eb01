#include "npc2/complex.hpp"

#include "npc2/verdict.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <unordered_set>

namespace npc2 {

namespace {

const char* kErrorNames[] = {
    "MissingFace",       "DuplicateSimplex", "DegenerateSimplex",
    "UnknownSimplex",    "UnknownVertex",    "ParentMismatch",
    "DegenerateTriangle", "EmptyComponent",  "NotFree",
    "InvalidGluing",     "UnknownGenerator", "BadParams",
    "ParseError",        "ValidationError",  "Precondition",
};

std::uint64_t mix(std::uint64_t h, std::uint64_t x) {
  h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

}  // namespace

const char* error_code_name(ErrorCode code) {
  return kErrorNames[static_cast<int>(code)];
}

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Yes: return "YES";
    case Verdict::No: return "NO";
    default: return "UNKNOWN";
  }
}

Edge make_edge(int a, int b) {
  if (a > b) std::swap(a, b);
  return {a, b};
}

Triangle make_triangle(int a, int b, int c) {
  Triangle t{a, b, c};
  std::sort(t.begin(), t.end());
  return t;
}

std::array<Edge, 3> Complex2::triangle_edges(const Triangle& t) {
  return {Edge{t[0], t[1]}, Edge{t[0], t[2]}, Edge{t[1], t[2]}};
}

Complex2 Complex2::from_parts(std::vector<int> vertices, std::vector<Edge> edges,
                              std::vector<Triangle> triangles) {
  Complex2 c;
  c.vertices_ = std::move(vertices);
  c.edges_ = std::move(edges);
  c.triangles_ = std::move(triangles);
  auto sorted_unique = [](const auto& xs) {
    return std::is_sorted(xs.begin(), xs.end()) &&
           std::adjacent_find(xs.begin(), xs.end()) == xs.end();
  };
  if (!sorted_unique(c.vertices_) || !sorted_unique(c.edges_) ||
      !sorted_unique(c.triangles_))
    throw Error(ErrorCode::ValidationError, "parts not canonical");
  for (const Edge& e : c.edges_)
    if (e[0] >= e[1] || c.vertex_index(e[0]) < 0 || c.vertex_index(e[1]) < 0)
      throw Error(ErrorCode::ValidationError, "edge not canonical or dangling");
  for (const Triangle& t : c.triangles_)
    for (const Edge& e : triangle_edges(t))
      if (c.edge_index(e) < 0)
        throw Error(ErrorCode::ValidationError, "triangle face missing");
  return c;
}

int Complex2::vertex_index(int v) const {
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v);
  if (it == vertices_.end() || *it != v) return -1;
  return static_cast<int>(it - vertices_.begin());
}

int Complex2::edge_index(const Edge& e) const {
  auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
  if (it == edges_.end() || *it != e) return -1;
  return static_cast<int>(it - edges_.begin());
}

int Complex2::triangle_index(const Triangle& t) const {
  auto it = std::lower_bound(triangles_.begin(), triangles_.end(), t);
  if (it == triangles_.end() || *it != t) return -1;
  return static_cast<int>(it - triangles_.begin());
}

std::vector<int> Complex2::incident_edges(int v) const {
  std::vector<int> out;
  for (std::size_t i = 0; i < edges_.size(); ++i)
    if (edges_[i][0] == v || edges_[i][1] == v) out.push_back(int(i));
  return out;
}

std::vector<int> Complex2::incident_triangles(int v) const {
  std::vector<int> out;
  for (std::size_t i = 0; i < triangles_.size(); ++i) {
    const Triangle& t = triangles_[i];
    if (t[0] == v || t[1] == v || t[2] == v) out.push_back(int(i));
  }
  return out;
}

std::vector<int> Complex2::triangles_of_edge(int e) const {
  std::vector<int> out;
  const Edge& edge = edges_[e];
  for (std::size_t i = 0; i < triangles_.size(); ++i) {
    const auto faces = triangle_edges(triangles_[i]);
    if (std::find(faces.begin(), faces.end(), edge) != faces.end())
      out.push_back(int(i));
  }
  return out;
}

std::uint64_t Complex2::hash() const {
  std::uint64_t h = 0xabcdef0102030405ULL;
  for (int v : vertices_) h = mix(h, std::uint64_t(v) + 1);
  h = mix(h, 0x1111);
  for (const Edge& e : edges_) h = mix(h, (std::uint64_t(e[0]) << 32) ^ std::uint64_t(e[1]));
  h = mix(h, 0x2222);
  for (const Triangle& t : triangles_)
    h = mix(h, (std::uint64_t(t[0]) << 42) ^ (std::uint64_t(t[1]) << 21) ^ std::uint64_t(t[2]));
  return h;
}

ValidationResult validate(const RawComplex& raw) {
  std::vector<Diagnostic> diags;
  auto report = [&](ErrorCode code, std::string detail) {
    diags.push_back({code, std::move(detail)});
  };

  std::vector<int> vertices;
  for (int v : raw.vertices) {
    if (v < 0) {
      report(ErrorCode::DegenerateSimplex,
             "vertex id " + std::to_string(v) + " is negative");
      continue;
    }
    vertices.push_back(v);
  }
  std::sort(vertices.begin(), vertices.end());
  for (std::size_t i = 1; i < vertices.size(); ++i)
    if (vertices[i] == vertices[i - 1])
      report(ErrorCode::DuplicateSimplex,
             "vertex " + std::to_string(vertices[i]) + " listed twice");
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());

  auto has_vertex = [&](int v) {
    return std::binary_search(vertices.begin(), vertices.end(), v);
  };
  auto edge_name = [](const Edge& e) {
    return std::to_string(e[0]) + "-" + std::to_string(e[1]);
  };

  std::vector<Edge> edges;
  for (const auto& raw_e : raw.edges) {
    if (raw_e[0] == raw_e[1]) {
      report(ErrorCode::DegenerateSimplex,
             "edge {" + std::to_string(raw_e[0]) + "," + std::to_string(raw_e[1]) +
                 "} repeats a vertex");
      continue;
    }
    if (raw_e[0] < 0 || raw_e[1] < 0) {
      report(ErrorCode::DegenerateSimplex, "edge with negative vertex id");
      continue;
    }
    edges.push_back(make_edge(raw_e[0], raw_e[1]));
  }
  std::sort(edges.begin(), edges.end());
  for (std::size_t i = 1; i < edges.size(); ++i)
    if (edges[i] == edges[i - 1])
      report(ErrorCode::DuplicateSimplex, "edge " + edge_name(edges[i]) + " listed twice");
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

  std::vector<Triangle> triangles;
  for (const auto& raw_t : raw.triangles) {
    if (raw_t[0] == raw_t[1] || raw_t[0] == raw_t[2] || raw_t[1] == raw_t[2]) {
      report(ErrorCode::DegenerateSimplex,
             "triangle {" + std::to_string(raw_t[0]) + "," + std::to_string(raw_t[1]) +
                 "," + std::to_string(raw_t[2]) + "} repeats a vertex");
      continue;
    }
    if (raw_t[0] < 0 || raw_t[1] < 0 || raw_t[2] < 0) {
      report(ErrorCode::DegenerateSimplex, "triangle with negative vertex id");
      continue;
    }
    triangles.push_back(make_triangle(raw_t[0], raw_t[1], raw_t[2]));
  }
  std::sort(triangles.begin(), triangles.end());
  for (std::size_t i = 1; i < triangles.size(); ++i)
    if (triangles[i] == triangles[i - 1]) {
      const Triangle& t = triangles[i];
      report(ErrorCode::DuplicateSimplex,
             "triangle {" + std::to_string(t[0]) + "," + std::to_string(t[1]) + "," +
                 std::to_string(t[2]) + "} listed twice");
    }
  triangles.erase(std::unique(triangles.begin(), triangles.end()), triangles.end());

  for (const Edge& e : edges) {
    for (int v : e)
      if (!has_vertex(v))
        report(ErrorCode::MissingFace, "edge " + edge_name(e) + " misses vertex " +
                                           std::to_string(v));
  }
  auto has_edge = [&](const Edge& e) {
    return std::binary_search(edges.begin(), edges.end(), e);
  };
  for (const Triangle& t : triangles) {
    for (int v : t)
      if (!has_vertex(v))
        report(ErrorCode::MissingFace, "triangle misses vertex " + std::to_string(v));
    for (const Edge& e : Complex2::triangle_edges(t))
      if (!has_edge(e))
        report(ErrorCode::MissingFace, "triangle {" + std::to_string(t[0]) + "," +
                                           std::to_string(t[1]) + "," +
                                           std::to_string(t[2]) + "} misses edge " +
                                           edge_name(e));
  }

  ValidationResult result;
  result.diagnostics = std::move(diags);
  if (result.diagnostics.empty())
    result.complex = Complex2::from_parts(std::move(vertices), std::move(edges),
                                          std::move(triangles));
  return result;
}

std::size_t BitMask::count() const {
  std::size_t n = 0;
  for (std::uint64_t w : words_) n += std::size_t(__builtin_popcountll(w));
  return n;
}

bool BitMask::any() const {
  for (std::uint64_t w : words_)
    if (w) return true;
  return false;
}

bool BitMask::is_subset_of(const BitMask& other) const {
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i] & ~other.words_[i]) return false;
  return true;
}

std::vector<int> BitMask::indices() const {
  std::vector<int> out;
  for (std::size_t i = 0; i < n_; ++i)
    if (test(i)) out.push_back(int(i));
  return out;
}

BitMask BitMask::operator&(const BitMask& other) const {
  BitMask r(n_);
  for (std::size_t i = 0; i < words_.size(); ++i)
    r.words_[i] = words_[i] & other.words_[i];
  return r;
}

BitMask BitMask::operator|(const BitMask& other) const {
  BitMask r(n_);
  for (std::size_t i = 0; i < words_.size(); ++i)
    r.words_[i] = words_[i] | other.words_[i];
  return r;
}

std::uint64_t BitMask::hash() const {
  std::uint64_t h = mix(0x5bd1e995, n_);
  for (std::uint64_t w : words_) h = mix(h, w);
  return h;
}

Subcomplex::Subcomplex(std::shared_ptr<const Complex2> parent, BitMask vertices,
                       BitMask edges, BitMask triangles)
    : parent_(std::move(parent)),
      vmask_(std::move(vertices)),
      emask_(std::move(edges)),
      tmask_(std::move(triangles)) {
  const Complex2& p = *parent_;
  if (vmask_.size() != p.vertices().size() || emask_.size() != p.edges().size() ||
      tmask_.size() != p.triangles().size())
    throw Error(ErrorCode::ParentMismatch, "mask sizes do not match parent");
  for (std::size_t i = 0; i < p.edges().size(); ++i) {
    if (!emask_.test(i)) continue;
    const Edge& e = p.edges()[i];
    if (!vmask_.test(p.vertex_index(e[0])) || !vmask_.test(p.vertex_index(e[1])))
      throw Error(ErrorCode::MissingFace,
                  "mask keeps edge " + std::to_string(e[0]) + "-" +
                      std::to_string(e[1]) + " but drops an endpoint");
  }
  for (std::size_t i = 0; i < p.triangles().size(); ++i) {
    if (!tmask_.test(i)) continue;
    for (const Edge& e : Complex2::triangle_edges(p.triangles()[i]))
      if (!emask_.test(p.edge_index(e)))
        throw Error(ErrorCode::MissingFace,
                    "mask keeps a triangle but drops edge " + std::to_string(e[0]) +
                        "-" + std::to_string(e[1]));
  }
}

Subcomplex Subcomplex::full(std::shared_ptr<const Complex2> parent) {
  const Complex2& p = *parent;
  BitMask v(p.vertices().size()), e(p.edges().size()), t(p.triangles().size());
  for (std::size_t i = 0; i < p.vertices().size(); ++i) v.set(i);
  for (std::size_t i = 0; i < p.edges().size(); ++i) e.set(i);
  for (std::size_t i = 0; i < p.triangles().size(); ++i) t.set(i);
  return Subcomplex(std::move(parent), std::move(v), std::move(e), std::move(t));
}

Subcomplex Subcomplex::empty_of(std::shared_ptr<const Complex2> parent) {
  const Complex2& p = *parent;
  return Subcomplex(parent, BitMask(p.vertices().size()),
                    BitMask(p.edges().size()), BitMask(p.triangles().size()));
}

int Subcomplex::dimension() const {
  if (tmask_.any()) return 2;
  if (emask_.any()) return 1;
  if (vmask_.any()) return 0;
  return -1;
}

std::vector<int> Subcomplex::vertex_ids() const {
  std::vector<int> out;
  for (int i : vmask_.indices()) out.push_back(parent_->vertices()[i]);
  return out;
}

std::vector<Edge> Subcomplex::edge_list() const {
  std::vector<Edge> out;
  for (int i : emask_.indices()) out.push_back(parent_->edges()[i]);
  return out;
}

std::vector<Triangle> Subcomplex::triangle_list() const {
  std::vector<Triangle> out;
  for (int i : tmask_.indices()) out.push_back(parent_->triangles()[i]);
  return out;
}

SimplexSet Subcomplex::simplex_set() const {
  return SimplexSet{vertex_ids(), edge_list(), triangle_list()};
}

bool Subcomplex::same_parent(const Subcomplex& other) const {
  return parent_ == other.parent_ || *parent_ == *other.parent_;
}

bool Subcomplex::contains(const Subcomplex& other) const {
  if (!same_parent(other))
    throw Error(ErrorCode::ParentMismatch, "subcomplexes have different parents");
  return other.vmask_.is_subset_of(vmask_) && other.emask_.is_subset_of(emask_) &&
         other.tmask_.is_subset_of(tmask_);
}

Complex2 Subcomplex::materialize() const {
  return Complex2::from_parts(vertex_ids(), edge_list(), triangle_list());
}

bool Subcomplex::operator==(const Subcomplex& other) const {
  return same_parent(other) && vmask_ == other.vmask_ && emask_ == other.emask_ &&
         tmask_ == other.tmask_;
}

Subcomplex closure(const std::shared_ptr<const Complex2>& parent,
                   const SimplexSet& seeds) {
  const Complex2& p = *parent;
  BitMask v(p.vertices().size()), e(p.edges().size()), t(p.triangles().size());
  for (int vid : seeds.vertices) {
    int i = p.vertex_index(vid);
    if (i < 0)
      throw Error(ErrorCode::UnknownSimplex, "vertex " + std::to_string(vid));
    v.set(i);
  }
  auto add_edge = [&](const Edge& raw) {
    Edge ed = make_edge(raw[0], raw[1]);
    int i = p.edge_index(ed);
    if (i < 0)
      throw Error(ErrorCode::UnknownSimplex,
                  "edge " + std::to_string(ed[0]) + "-" + std::to_string(ed[1]));
    e.set(i);
    v.set(p.vertex_index(ed[0]));
    v.set(p.vertex_index(ed[1]));
  };
  for (const Edge& ed : seeds.edges) add_edge(ed);
  for (const Triangle& raw : seeds.triangles) {
    Triangle tr = make_triangle(raw[0], raw[1], raw[2]);
    int i = p.triangle_index(tr);
    if (i < 0)
      throw Error(ErrorCode::UnknownSimplex,
                  "triangle {" + std::to_string(tr[0]) + "," + std::to_string(tr[1]) +
                      "," + std::to_string(tr[2]) + "}");
    t.set(i);
    for (const Edge& ed : Complex2::triangle_edges(tr)) add_edge(ed);
  }
  return Subcomplex(parent, std::move(v), std::move(e), std::move(t));
}

Subcomplex intersect(const Subcomplex& a, const Subcomplex& b) {
  if (!a.same_parent(b))
    throw Error(ErrorCode::ParentMismatch, "intersect: different parents");
  return Subcomplex(a.parent_ptr(), a.vertex_mask() & b.vertex_mask(),
                    a.edge_mask() & b.edge_mask(),
                    a.triangle_mask() & b.triangle_mask());
}

Subcomplex unite(const Subcomplex& a, const Subcomplex& b) {
  if (!a.same_parent(b))
    throw Error(ErrorCode::ParentMismatch, "union: different parents");
  return Subcomplex(a.parent_ptr(), a.vertex_mask() | b.vertex_mask(),
                    a.edge_mask() | b.edge_mask(),
                    a.triangle_mask() | b.triangle_mask());
}

std::pair<Subcomplex, CombinatorialLink> star_and_link(
    const std::shared_ptr<const Complex2>& c, int v) {
  if (!c->has_vertex(v))
    throw Error(ErrorCode::UnknownVertex, std::to_string(v));
  SimplexSet seeds;
  seeds.vertices.push_back(v);
  CombinatorialLink link;
  link.vertex = v;
  for (int ei : c->incident_edges(v)) {
    seeds.edges.push_back(c->edges()[ei]);
    link.node_edges.push_back(c->edges()[ei]);
  }
  auto node_of = [&](const Edge& e) {
    auto it = std::find(link.node_edges.begin(), link.node_edges.end(), e);
    return int(it - link.node_edges.begin());
  };
  for (int ti : c->incident_triangles(v)) {
    const Triangle& t = c->triangles()[ti];
    seeds.triangles.push_back(t);
    std::array<int, 2> others{};
    int k = 0;
    for (int w : t)
      if (w != v) others[k++] = w;
    link.arcs.push_back({node_of(make_edge(v, others[0])),
                         node_of(make_edge(v, others[1]))});
    link.arc_triangles.push_back(t);
  }
  return {closure(c, seeds), std::move(link)};
}

namespace {

// Union-find over parent vertex indices.
struct Dsu {
  std::vector<int> parent;
  explicit Dsu(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void merge(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

ComponentDecomposition connected_components(const Subcomplex& s) {
  const Complex2& p = s.parent();
  Dsu dsu(p.vertices().size());
  for (int ei : s.edge_mask().indices()) {
    const Edge& e = p.edges()[ei];
    dsu.merge(p.vertex_index(e[0]), p.vertex_index(e[1]));
  }
  // Group member vertex indices by root, keyed by minimal vertex id.
  std::vector<int> member = s.vertex_mask().indices();
  std::vector<std::pair<int, int>> root_base;  // (root, min vertex id)
  for (int vi : member) {
    int r = dsu.find(vi);
    bool found = false;
    for (auto& rb : root_base)
      if (rb.first == r) {
        rb.second = std::min(rb.second, p.vertices()[vi]);
        found = true;
      }
    if (!found) root_base.push_back({r, p.vertices()[vi]});
  }
  std::sort(root_base.begin(), root_base.end(),
            [](const auto& a, const auto& b) { return a.second < b.second; });

  ComponentDecomposition out;
  for (const auto& [root, base] : root_base) {
    BitMask v(p.vertices().size()), e(p.edges().size()), t(p.triangles().size());
    for (int vi : member)
      if (dsu.find(vi) == root) v.set(vi);
    for (int ei : s.edge_mask().indices())
      if (dsu.find(p.vertex_index(p.edges()[ei][0])) == root) e.set(ei);
    for (int ti : s.triangle_mask().indices())
      if (dsu.find(p.vertex_index(p.triangles()[ti][0])) == root) t.set(ti);
    out.components.emplace_back(s.parent_ptr(), std::move(v), std::move(e),
                                std::move(t));
    out.basepoints.push_back(base);
  }
  return out;
}

bool is_connected(const Subcomplex& s) {
  return connected_components(s).count() <= 1;
}

bool is_connected(const Complex2& c) {
  auto ptr = std::make_shared<const Complex2>(c);
  return is_connected(Subcomplex::full(ptr));
}

Subcomplex combinatorial_ball(const std::shared_ptr<const Complex2>& c, int v,
                              int r) {
  const Complex2& p = *c;
  int src = p.vertex_index(v);
  if (src < 0) throw Error(ErrorCode::UnknownVertex, std::to_string(v));
  if (r < 0) throw Error(ErrorCode::BadParams, "negative radius");

  std::vector<int> dist(p.vertices().size(), -1);
  std::queue<int> q;
  dist[src] = 0;
  q.push(src);
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    if (dist[u] >= r) continue;
    for (int ei : p.incident_edges(p.vertices()[u])) {
      const Edge& e = p.edges()[ei];
      int other = p.vertex_index(e[0] == p.vertices()[u] ? e[1] : e[0]);
      if (dist[other] < 0) {
        dist[other] = dist[u] + 1;
        q.push(other);
      }
    }
  }

  auto inside = [&](int vid) {
    int i = p.vertex_index(vid);
    return dist[i] >= 0 && dist[i] <= r;
  };
  BitMask vm(p.vertices().size()), em(p.edges().size()), tm(p.triangles().size());
  for (std::size_t i = 0; i < p.vertices().size(); ++i)
    if (dist[i] >= 0 && dist[i] <= r) vm.set(i);
  for (std::size_t i = 0; i < p.edges().size(); ++i)
    if (inside(p.edges()[i][0]) && inside(p.edges()[i][1])) em.set(i);
  for (std::size_t i = 0; i < p.triangles().size(); ++i) {
    const Triangle& t = p.triangles()[i];
    if (inside(t[0]) && inside(t[1]) && inside(t[2])) tm.set(i);
  }
  return Subcomplex(c, std::move(vm), std::move(em), std::move(tm));
}

}  // namespace npc2
