#include <algorithm>

#include "npc2/harness.hpp"

namespace npc2 {

namespace {

long param_or(const std::map<std::string, long>& params, const std::string& key,
              long fallback) {
  auto it = params.find(key);
  return it == params.end() ? fallback : it->second;
}

Complex2 build(const std::vector<int>& vertices,
               const std::vector<std::array<int, 2>>& edges,
               const std::vector<std::array<int, 3>>& triangles) {
  RawComplex raw;
  raw.vertices = vertices;
  raw.edges = edges;
  raw.triangles = triangles;
  // Generators list triangle faces implicitly; add them here.
  for (const auto& t : triangles) {
    Triangle tt = make_triangle(t[0], t[1], t[2]);
    for (const Edge& e : Complex2::triangle_edges(tt))
      raw.edges.push_back({e[0], e[1]});
  }
  std::sort(raw.edges.begin(), raw.edges.end(),
            [](auto a, auto b) { return make_edge(a[0], a[1]) < make_edge(b[0], b[1]); });
  raw.edges.erase(std::unique(raw.edges.begin(), raw.edges.end(),
                              [](auto a, auto b) {
                                return make_edge(a[0], a[1]) == make_edge(b[0], b[1]);
                              }),
                  raw.edges.end());
  ValidationResult vr = validate(raw);
  if (!vr.ok())
    throw Error(ErrorCode::BadParams, "generator produced an invalid complex: " +
                                          vr.diagnostics.front().detail);
  return *vr.complex;
}

Complex2 make_triangle_complex() { return build({0, 1, 2}, {}, {{0, 1, 2}}); }

Complex2 make_octahedron() {
  // 0 = north pole, 1..4 = equator cycle, 5 = south pole.
  std::vector<std::array<int, 3>> triangles = {
      {0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 1, 4},
      {1, 2, 5}, {2, 3, 5}, {3, 4, 5}, {1, 4, 5}};
  return build({0, 1, 2, 3, 4, 5}, {}, triangles);
}

Complex2 make_disk_grid(long n) {
  if (n < 1) throw Error(ErrorCode::BadParams, "disk_grid needs n >= 1");
  std::vector<int> vertices;
  for (long i = 0; i < n * n; ++i) vertices.push_back(int(i));
  auto id = [n](long r, long col) { return int(r * n + col); };
  std::vector<std::array<int, 2>> edges;
  std::vector<std::array<int, 3>> triangles;
  if (n == 1) return build(vertices, {}, {});
  for (long r = 0; r + 1 < n; ++r)
    for (long col = 0; col + 1 < n; ++col) {
      int v00 = id(r, col), v01 = id(r, col + 1);
      int v10 = id(r + 1, col), v11 = id(r + 1, col + 1);
      triangles.push_back({v00, v10, v11});
      triangles.push_back({v00, v01, v11});
    }
  return build(vertices, edges, triangles);
}

Complex2 make_torus_grid(long n) {
  if (n < 3)
    throw Error(ErrorCode::BadParams, "torus_grid needs n >= 3 to stay simplicial");
  std::vector<int> vertices;
  for (long i = 0; i < n * n; ++i) vertices.push_back(int(i));
  auto id = [n](long r, long col) { return int(((r % n + n) % n) * n + ((col % n + n) % n)); };
  std::vector<std::array<int, 3>> triangles;
  for (long r = 0; r < n; ++r)
    for (long col = 0; col < n; ++col) {
      int v00 = id(r, col), v01 = id(r, col + 1);
      int v10 = id(r + 1, col), v11 = id(r + 1, col + 1);
      triangles.push_back({v00, v10, v11});
      triangles.push_back({v00, v01, v11});
    }
  return build(vertices, {}, triangles);
}

Complex2 make_cone(long k) {
  if (k < 3) throw Error(ErrorCode::BadParams, "cone needs k >= 3");
  std::vector<int> vertices{0};  // apex
  for (long i = 1; i <= k; ++i) vertices.push_back(int(i));
  std::vector<std::array<int, 3>> triangles;
  for (long i = 1; i <= k; ++i) {
    int a = int(i), b = int(i % k + 1);
    triangles.push_back({0, a, b});
  }
  return build(vertices, {}, triangles);
}

Complex2 make_path(long k) {
  if (k < 0) throw Error(ErrorCode::BadParams, "path needs k >= 0");
  std::vector<int> vertices;
  for (long i = 0; i <= k; ++i) vertices.push_back(int(i));
  std::vector<std::array<int, 2>> edges;
  for (long i = 0; i < k; ++i) edges.push_back({int(i), int(i + 1)});
  return build(vertices, edges, {});
}

}  // namespace

Generated generate(const std::string& name,
                   const std::map<std::string, long>& params) {
  Generated g;
  g.name = name;
  if (name == "triangle") {
    g.complex = make_triangle_complex();
  } else if (name == "octahedron") {
    g.complex = make_octahedron();
  } else if (name == "disk_grid") {
    long n = param_or(params, "n", 3);
    g.complex = make_disk_grid(n);
    g.name = "disk_grid(" + std::to_string(n) + ")";
  } else if (name == "torus_grid") {
    long n = param_or(params, "n", 3);
    g.complex = make_torus_grid(n);
    g.name = "torus_grid(" + std::to_string(n) + ")";
  } else if (name == "cone") {
    long k = param_or(params, "k", 4);
    g.complex = make_cone(k);
    g.name = "cone(" + std::to_string(k) + ")";
  } else if (name == "path") {
    long k = param_or(params, "k", 2);
    g.complex = make_path(k);
    g.name = "path(" + std::to_string(k) + ")";
  } else {
    throw Error(ErrorCode::UnknownGenerator, name);
  }
  g.metric = MetricAssignment::unit(g.complex);
  return g;
}

}  // namespace npc2
