#include "ttone/halin.hpp"

#include <algorithm>
#include <string>

#include "ttone/errors.hpp"

namespace ttone {

HalinStructure validate_halin(const Graph& g, std::span<const Edge> tree_edges, std::span<const Vertex> leaf_order) {
  const int n = g.order();
  HalinStructure h;
  h.graph = g;
  h.tree_adjacency.assign(n, {});
  for (auto [u, v] : tree_edges) {
    if (u < 0 || v < 0 || u >= n || v >= n || u == v)
      fail(ErrorKind::precondition, "tree-edges", "tree edge out of range");
    h.tree_edges.push_back(make_edge(u, v));
  }
  std::sort(h.tree_edges.begin(), h.tree_edges.end());
  if (std::adjacent_find(h.tree_edges.begin(), h.tree_edges.end()) != h.tree_edges.end())
    fail(ErrorKind::precondition, "tree-edges", "duplicate tree edge");
  if (static_cast<int>(h.tree_edges.size()) != n - 1 || n < 4)
    fail(ErrorKind::precondition, "tree-edges", "tree must span all vertices with n - 1 edges (n >= 4)");
  for (auto [u, v] : h.tree_edges) {
    h.tree_adjacency[u].push_back(v);
    h.tree_adjacency[v].push_back(u);
  }
  for (auto& list : h.tree_adjacency) std::sort(list.begin(), list.end());
  Graph tree(n, h.tree_edges);
  if (!tree.connected()) fail(ErrorKind::precondition, "tree-edges", "tree edges do not form a spanning tree");

  std::vector<Vertex> leaves;
  for (Vertex v = 0; v < n; ++v) {
    int d = tree.degree(v);
    if (d == 2) fail(ErrorKind::precondition, "degree-two-vertex", "tree vertex " + std::to_string(v) + " has degree two");
    if (d == 1)
      leaves.push_back(v);
    else
      h.internal_vertices.push_back(v);
  }

  std::vector<int> pos(n, -1);
  for (std::size_t i = 0; i < leaf_order.size(); ++i) {
    Vertex v = leaf_order[i];
    if (v < 0 || v >= n || tree.degree(v) != 1 || pos[v] >= 0)
      fail(ErrorKind::precondition, "leaf-order", "leaf order must list every tree leaf exactly once");
    pos[v] = static_cast<int>(i);
  }
  if (leaf_order.size() != leaves.size())
    fail(ErrorKind::precondition, "leaf-order", "leaf order must list every tree leaf exactly once");
  h.leaf_order.assign(leaf_order.begin(), leaf_order.end());
  const int leaf_count = static_cast<int>(leaves.size());

  // For every tree edge, the leaves on one side must form an arc of the cycle.
  std::vector<char> side(n, 0);
  for (auto [u, v] : h.tree_edges) {
    std::fill(side.begin(), side.end(), 0);
    std::vector<Vertex> stack{v};
    side[v] = 1;
    while (!stack.empty()) {
      Vertex a = stack.back();
      stack.pop_back();
      for (Vertex b : h.tree_adjacency[a])
        if (b != u && !side[b]) {
          side[b] = 1;
          stack.push_back(b);
        }
    }
    int boundaries = 0;
    for (int i = 0; i < leaf_count; ++i)
      if (side[h.leaf_order[i]] != side[h.leaf_order[(i + 1) % leaf_count]]) ++boundaries;
    if (boundaries > 2)
      fail(ErrorKind::precondition, "contiguity",
           "leaves beyond tree edge (" + std::to_string(u) + "," + std::to_string(v) + ") are not consecutive");
  }

  std::vector<Edge> expected = h.tree_edges;
  for (int i = 0; i < leaf_count; ++i) expected.push_back(make_edge(h.leaf_order[i], h.leaf_order[(i + 1) % leaf_count]));
  std::sort(expected.begin(), expected.end());
  if (std::adjacent_find(expected.begin(), expected.end()) != expected.end() || expected != g.edges())
    fail(ErrorKind::precondition, "edge-set-mismatch", "graph edges differ from tree plus leaf cycle");
  return h;
}

FanDecomposition deepest_fan(const HalinStructure& h, Vertex root) {
  const int n = h.graph.order();
  if (root < 0 || root >= n || h.is_leaf(root))
    fail(ErrorKind::precondition, "root-not-internal", "fan root must be an internal tree vertex");
  if (h.internal_vertices.size() < 2)
    fail(ErrorKind::precondition, "only-one-internal-vertex", "the graph is a wheel");
  std::vector<int> depth(n, -1);
  std::vector<Vertex> parent(n, -1);
  std::vector<Vertex> queue{root};
  depth[root] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    Vertex a = queue[head];
    for (Vertex b : h.tree_adjacency[a])
      if (depth[b] < 0) {
        depth[b] = depth[a] + 1;
        parent[b] = a;
        queue.push_back(b);
      }
  }
  FanDecomposition fan;
  fan.root = root;
  for (Vertex v : h.internal_vertices)
    if (fan.x < 0 || depth[v] > depth[fan.x]) fan.x = v;
  fan.parent = parent[fan.x];

  const int leaf_count = static_cast<int>(h.leaf_order.size());
  auto child = [&](Vertex v) { return v != fan.parent && h.graph.adjacent(v, fan.x) && h.is_leaf(v); };
  int start = -1;
  for (int i = 0; i < leaf_count; ++i)
    if (child(h.leaf_order[i]) && !child(h.leaf_order[(i + leaf_count - 1) % leaf_count])) {
      start = i;
      break;
    }
  if (start < 0) fail(ErrorKind::internal, "fan", "deepest vertex has no leaf run");
  for (int i = start; i < start + leaf_count && child(h.leaf_order[i % leaf_count]); ++i) fan.leaf_run.push_back(h.leaf_order[i % leaf_count]);
  int children = 0;
  for (Vertex b : h.tree_adjacency[fan.x])
    if (b != fan.parent) ++children;
  if (children != static_cast<int>(fan.leaf_run.size()))
    fail(ErrorKind::internal, "fan", "leaf children of the deepest vertex are not consecutive");
  return fan;
}

}  // namespace ttone
