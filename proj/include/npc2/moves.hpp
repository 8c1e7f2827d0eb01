// Elementary extension/collapse moves, free-face pairs, and the memoized
// collapsibility search with replayable certificates.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "npc2/complex.hpp"
#include "npc2/verdict.hpp"

namespace npc2 {

enum class MoveKind {
  TriangleCollapse,   // remove a free edge together with its unique triangle
  TriangleExtension,  // glue a new triangle along two existing edges
  EdgeCollapse,       // remove a free vertex together with its unique edge
  EdgeExtension,      // attach a new vertex by a new edge
};

const char* move_kind_name(MoveKind k);

struct Move {
  MoveKind kind{};
  Edge edge{-1, -1};        // the free/new edge, or the first glue edge
  Edge edge2{-1, -1};       // TriangleExtension: the second glue edge
  Triangle triangle{-1, -1, -1};
  int vertex = -1;          // EdgeCollapse: free vertex; EdgeExtension: new vertex

  static Move triangle_collapse(const Edge& free_edge, const Triangle& t);
  static Move triangle_extension(const Edge& glue1, const Edge& glue2);
  static Move edge_collapse(int free_vertex, const Edge& e);
  static Move edge_extension(int existing_vertex, int new_vertex);
};

/// All free pairs: edges lying in exactly one triangle, and vertices lying in
/// exactly one edge and no triangle, each paired as a collapse move.
std::vector<Move> free_pairs(const Complex2& c);

/// Applies one move, returning a new complex. Throws Error(NotFree) or
/// Error(InvalidGluing) when the preconditions fail.
Complex2 apply_move(const Complex2& c, const Move& m);

struct CollapseCertificate {
  std::vector<Move> moves;
  int terminal = -1;
};

struct CollapseResult {
  Verdict verdict = Verdict::Unknown;
  std::optional<CollapseCertificate> certificate;  // set on YES
  std::uint64_t visited = 0;                       // intermediate complexes seen
};

/// Depth-first search over collapse sequences with memoization on canonical
/// forms. YES when a single vertex is reached, NO when the search space is
/// exhausted, UNKNOWN when the node budget runs out. Requires a connected
/// nonempty complex.
CollapseResult is_collapsible(const Complex2& c, std::uint64_t budget_nodes);

struct CertificateCheck {
  bool ok = false;
  std::size_t failed_move = 0;  // valid when !ok and reason is a move
  std::string reason;
};

/// Replays the certificate from c; true iff every move applies and the
/// result is exactly the terminal vertex.
CertificateCheck verify_certificate(const Complex2& c,
                                    const CollapseCertificate& cert);

}  // namespace npc2
