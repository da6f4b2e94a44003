#include "ttone/forbidden.hpp"

#include <algorithm>

#include "ttone/errors.hpp"

namespace ttone {

namespace {

// Simple paths from `start` through vertices larger than start, closing back at start.
bool extend_path(const Graph& g, std::vector<Vertex>& path, std::vector<char>& on_path, int length) {
  Vertex tail = path.back();
  Vertex start = path.front();
  if (static_cast<int>(path.size()) == length) return g.adjacent(tail, start);
  for (Vertex w : g.neighbors(tail)) {
    if (w <= start || on_path[w]) continue;
    // Second vertex below last vertex fixes the walk direction.
    if (static_cast<int>(path.size()) == length - 1 && w < path[1]) continue;
    path.push_back(w);
    on_path[w] = 1;
    if (extend_path(g, path, on_path, length)) return true;
    on_path[w] = 0;
    path.pop_back();
  }
  return false;
}

}  // namespace

std::optional<std::vector<Vertex>> find_cycle(const Graph& g, int length) {
  if (length < 3 || length > 7)
    fail(ErrorKind::invalid_input, "cycle-length", "cycle search supports lengths 3..7");
  std::vector<char> on_path(g.order(), 0);
  for (Vertex s = 0; s < g.order(); ++s) {
    std::vector<Vertex> path{s};
    on_path[s] = 1;
    bool found = extend_path(g, path, on_path, length);
    on_path[s] = 0;
    if (found) return path;
    for (Vertex v : path) on_path[v] = 0;
  }
  return std::nullopt;
}

std::optional<std::vector<Vertex>> find_k4e(const Graph& g) {
  for (auto [b, c] : g.edges()) {
    std::vector<Vertex> common;
    std::set_intersection(g.neighbors(b).begin(), g.neighbors(b).end(), g.neighbors(c).begin(),
                          g.neighbors(c).end(), std::back_inserter(common));
    if (common.size() >= 2) return std::vector<Vertex>{common[0], b, c, common[1]};
  }
  return std::nullopt;
}

ForbiddenReport detect_forbidden(const Graph& g) {
  ForbiddenReport r;
  r.has_c3 = find_cycle(g, 3).has_value();
  r.has_c4 = find_cycle(g, 4).has_value();
  r.has_c7 = find_cycle(g, 7).has_value();
  r.has_k4e = find_k4e(g).has_value();
  r.connected = g.connected();
  r.max_degree = g.max_degree();
  r.min_degree = g.min_degree();
  return r;
}

}  // namespace ttone
