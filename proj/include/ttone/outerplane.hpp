#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "ttone/graph.hpp"

namespace ttone {

// A connected graph drawn with its vertices on a circle in `outer_order`
// and every edge as a straight chord; valid when no two chords cross.
struct OuterplaneEmbedding {
  Graph graph;
  std::vector<Vertex> outer_order;
};

// Bounded faces of an outerplane embedding. Each cycle starts at its
// smallest vertex and continues toward the smaller of its two neighbors;
// the list is sorted lexicographically.
struct FaceSet {
  std::vector<std::vector<Vertex>> faces;
};

struct WeakDual {
  int face_count = 0;
  std::vector<std::pair<int, int>> links;  // face index pairs sharing an edge, ascending
  std::vector<int> pendant_faces;          // ascending face indices
  std::vector<int> degree;                 // per face, number of links
};

// Throws invalid_input (code "outer-order") for a malformed order,
// precondition "disconnected" and precondition "edge-crossing".
FaceSet validate_outerplane(const Graph& g, std::span<const Vertex> outer_order);
inline FaceSet validate_outerplane(const OuterplaneEmbedding& emb) {
  return validate_outerplane(emb.graph, emb.outer_order);
}

// The face set must come from validate_outerplane on g. Leaves are faces
// with at most one link. Throws internal "dual-cycle" if the dual is not a forest.
WeakDual weak_dual(const FaceSet& fs, const Graph& g);

// Cyclic order in which no two edges cross, found by exhaustive search.
// Only for connected graphs with at most 10 vertices (precondition otherwise).
std::optional<std::vector<Vertex>> find_outer_order(const Graph& g);

// True when some pair of chords properly interleaves in the given order.
bool has_crossing(const Graph& g, std::span<const Vertex> outer_order);

}  // namespace ttone
