#include "ttone/graph.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <string>

#include "ttone/errors.hpp"

namespace ttone {

Edge make_edge(Vertex u, Vertex v) { return u < v ? Edge{u, v} : Edge{v, u}; }

Graph::Graph(int n, std::span<const Edge> edges) : n_(n), adjacency_(n < 0 ? 0 : n) {
  if (n < 0) fail(ErrorKind::invalid_input, "vertex-count", "negative vertex count");
  edges_.reserve(edges.size());
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n)
      fail(ErrorKind::invalid_input, "vertex-range",
           "edge (" + std::to_string(u) + "," + std::to_string(v) + ") out of range");
    if (u == v) fail(ErrorKind::invalid_input, "self-loop", "loop at " + std::to_string(u));
    edges_.push_back(make_edge(u, v));
  }
  std::sort(edges_.begin(), edges_.end());
  auto dup = std::adjacent_find(edges_.begin(), edges_.end());
  if (dup != edges_.end())
    fail(ErrorKind::invalid_input, "duplicate-edge",
         "edge (" + std::to_string(dup->first) + "," + std::to_string(dup->second) + ") repeated");
  for (auto [u, v] : edges_) {
    adjacency_[u].push_back(v);
    adjacency_[v].push_back(u);
  }
  for (auto& list : adjacency_) std::sort(list.begin(), list.end());
}

Graph::Graph(int n, std::initializer_list<Edge> edges)
    : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

int Graph::max_degree() const noexcept {
  int best = 0;
  for (const auto& list : adjacency_) best = std::max(best, static_cast<int>(list.size()));
  return best;
}

int Graph::min_degree() const noexcept {
  if (n_ == 0) return 0;
  int best = n_;
  for (const auto& list : adjacency_) best = std::min(best, static_cast<int>(list.size()));
  return best;
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  const auto& list = adjacency_[u];
  return std::binary_search(list.begin(), list.end(), v);
}

bool Graph::connected() const { return connected_components(*this).size() <= 1; }

Graph induced_subgraph(const Graph& g, std::span<const Vertex> keep) {
  std::vector<int> index(g.order(), -1);
  for (std::size_t i = 0; i < keep.size(); ++i) index[keep[i]] = static_cast<int>(i);
  std::vector<Edge> edges;
  for (auto [u, v] : g.edges())
    if (index[u] >= 0 && index[v] >= 0) edges.push_back(make_edge(index[u], index[v]));
  return Graph(static_cast<int>(keep.size()), edges);
}

std::vector<std::vector<Vertex>> connected_components(const Graph& g) {
  std::vector<int> comp(g.order(), -1);
  std::vector<std::vector<Vertex>> out;
  for (Vertex s = 0; s < g.order(); ++s) {
    if (comp[s] >= 0) continue;
    std::vector<Vertex> members{s};
    comp[s] = static_cast<int>(out.size());
    for (std::size_t head = 0; head < members.size(); ++head)
      for (Vertex w : g.neighbors(members[head]))
        if (comp[w] < 0) {
          comp[w] = comp[s];
          members.push_back(w);
        }
    std::sort(members.begin(), members.end());
    out.push_back(std::move(members));
  }
  return out;
}

std::vector<int> bfs_distances(const Graph& g, Vertex source) {
  std::vector<int> dist(g.order(), -1);
  std::queue<Vertex> queue;
  dist[source] = 0;
  queue.push(source);
  while (!queue.empty()) {
    Vertex u = queue.front();
    queue.pop();
    for (Vertex w : g.neighbors(u))
      if (dist[w] < 0) {
        dist[w] = dist[u] + 1;
        queue.push(w);
      }
  }
  return dist;
}

DistanceTable::DistanceTable(const Graph& g, int cap) : n_(g.order()), cap_(cap), balls_(g.order()) {
  if (cap < 1) fail(ErrorKind::invalid_input, "distance-cap", "cap must be positive");
  std::vector<int> dist(n_, -1);
  std::vector<Vertex> touched;
  for (Vertex s = 0; s < n_; ++s) {
    touched.assign(1, s);
    dist[s] = 0;
    for (std::size_t head = 0; head < touched.size(); ++head) {
      Vertex u = touched[head];
      if (dist[u] == cap) continue;
      for (Vertex w : g.neighbors(u))
        if (dist[w] < 0) {
          dist[w] = dist[u] + 1;
          touched.push_back(w);
        }
    }
    auto& ball = balls_[s];
    for (Vertex u : touched)
      if (u != s) ball.push_back({u, dist[u]});
    std::sort(ball.begin(), ball.end(), [](const Entry& a, const Entry& b) { return a.vertex < b.vertex; });
    for (Vertex u : touched) dist[u] = -1;
  }
}

int DistanceTable::distance(Vertex u, Vertex v) const {
  if (u == v) return 0;
  const auto& ball = balls_[u];
  auto it = std::lower_bound(ball.begin(), ball.end(), v,
                             [](const Entry& e, Vertex x) { return e.vertex < x; });
  return (it != ball.end() && it->vertex == v) ? it->distance : beyond();
}

DistanceTable distances_up_to(const Graph& g, int cap) { return DistanceTable(g, cap); }

}  // namespace ttone
