#pragma once

#include <span>
#include <vector>

#include "ttone/graph.hpp"

namespace ttone {

// H = T ∪ C: a spanning tree without degree-two vertices plus the cycle
// through its leaves in `leaf_order`.
struct HalinStructure {
  Graph graph;
  std::vector<Edge> tree_edges;          // sorted
  std::vector<Vertex> leaf_order;        // cyclic
  std::vector<Vertex> internal_vertices; // ascending
  std::vector<std::vector<Vertex>> tree_adjacency;

  bool is_leaf(Vertex v) const { return tree_adjacency[v].size() == 1; }
};

// Throws precondition errors with codes: "tree-edges" (not a spanning tree
// of g or not a subset of g's edges), "degree-two-vertex", "leaf-order",
// "contiguity", "edge-set-mismatch".
HalinStructure validate_halin(const Graph& g, std::span<const Edge> tree_edges, std::span<const Vertex> leaf_order);

struct FanDecomposition {
  Vertex x = -1;                 // deepest internal vertex
  Vertex parent = -1;
  Vertex root = -1;
  std::vector<Vertex> leaf_run;  // x's leaf children, consecutive in leaf_order
};

// Deepest internal vertex below `root` (ties by smallest id). Throws
// precondition "only-one-internal-vertex" for wheels and "root-not-internal".
FanDecomposition deepest_fan(const HalinStructure& h, Vertex root);

}  // namespace ttone
