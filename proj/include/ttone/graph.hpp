#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace ttone {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;  // stored with first < second

// Simple undirected graph on vertices 0..n-1. Immutable after construction.
class Graph {
 public:
  Graph() = default;
  // Throws invalid_input on loops, duplicate edges or out-of-range endpoints.
  Graph(int n, std::span<const Edge> edges);
  Graph(int n, std::initializer_list<Edge> edges);

  int order() const noexcept { return n_; }
  int size() const noexcept { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const std::vector<Vertex>& neighbors(Vertex v) const { return adjacency_[v]; }
  int degree(Vertex v) const { return static_cast<int>(adjacency_[v].size()); }
  int max_degree() const noexcept;
  int min_degree() const noexcept;
  bool adjacent(Vertex u, Vertex v) const;
  bool connected() const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  int n_ = 0;
  std::vector<std::vector<Vertex>> adjacency_;
  std::vector<Edge> edges_;
};

Edge make_edge(Vertex u, Vertex v);

// Subgraph induced by `keep`; vertex i of the result is keep[i].
Graph induced_subgraph(const Graph& g, std::span<const Vertex> keep);

// Connected components, each sorted ascending; components ordered by smallest vertex.
std::vector<std::vector<Vertex>> connected_components(const Graph& g);

// Exact shortest-path lengths from `source`; -1 for unreachable vertices.
std::vector<int> bfs_distances(const Graph& g, Vertex source);

// Pairwise distances truncated at `cap`. Pairs farther apart than cap
// (or disconnected) are reported as beyond().
class DistanceTable {
 public:
  struct Entry {
    Vertex vertex;
    int distance;
  };

  DistanceTable() = default;
  DistanceTable(const Graph& g, int cap);

  int cap() const noexcept { return cap_; }
  int order() const noexcept { return n_; }
  static constexpr int beyond() noexcept { return 0x7fffffff; }
  // 0 on the diagonal, beyond() when farther than cap.
  int distance(Vertex u, Vertex v) const;
  bool within(Vertex u, Vertex v) const { return distance(u, v) != beyond(); }
  // All other vertices within cap of v, ascending by vertex id.
  const std::vector<Entry>& ball(Vertex v) const { return balls_[v]; }

 private:
  int n_ = 0;
  int cap_ = 0;
  std::vector<std::vector<Entry>> balls_;
};

DistanceTable distances_up_to(const Graph& g, int cap);

}  // namespace ttone
