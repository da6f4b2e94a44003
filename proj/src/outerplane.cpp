#include "ttone/outerplane.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>

#include "ttone/errors.hpp"

namespace ttone {

namespace {

std::vector<int> positions_of(const Graph& g, std::span<const Vertex> order) {
  const int n = g.order();
  if (static_cast<int>(order.size()) != n)
    fail(ErrorKind::invalid_input, "outer-order",
         "outer order lists " + std::to_string(order.size()) + " vertices, graph has " + std::to_string(n));
  std::vector<int> pos(n, -1);
  for (int i = 0; i < n; ++i) {
    Vertex v = order[i];
    if (v < 0 || v >= n) fail(ErrorKind::invalid_input, "outer-order", "vertex " + std::to_string(v) + " out of range");
    if (pos[v] >= 0) fail(ErrorKind::invalid_input, "outer-order", "vertex " + std::to_string(v) + " repeated");
    pos[v] = i;
  }
  return pos;
}

bool crossing_by_position(const Graph& g, const std::vector<int>& pos) {
  const int n = g.order();
  std::vector<std::vector<int>> starts(n);
  std::vector<int> ending(n, 0);
  for (auto [u, v] : g.edges()) {
    int a = std::min(pos[u], pos[v]);
    int b = std::max(pos[u], pos[v]);
    starts[a].push_back(b);
    ++ending[b];
  }
  std::vector<int> stack;  // chord right endpoints
  for (int p = 0; p < n; ++p) {
    for (int i = 0; i < ending[p]; ++i) {
      if (stack.empty() || stack.back() != p) return true;
      stack.pop_back();
    }
    auto& s = starts[p];
    std::sort(s.begin(), s.end(), std::greater<>());
    for (int b : s) stack.push_back(b);
  }
  return false;
}

std::vector<Vertex> canonical_cycle(std::vector<Vertex> cycle) {
  auto it = std::min_element(cycle.begin(), cycle.end());
  std::rotate(cycle.begin(), it, cycle.end());
  if (cycle.size() > 2 && cycle.back() < cycle[1]) std::reverse(cycle.begin() + 1, cycle.end());
  return cycle;
}

}  // namespace

bool has_crossing(const Graph& g, std::span<const Vertex> outer_order) {
  return crossing_by_position(g, positions_of(g, outer_order));
}

FaceSet validate_outerplane(const Graph& g, std::span<const Vertex> outer_order) {
  const int n = g.order();
  auto pos = positions_of(g, outer_order);
  if (!g.connected()) fail(ErrorKind::precondition, "disconnected", "outerplane embeddings must be connected");
  if (crossing_by_position(g, pos)) fail(ErrorKind::precondition, "edge-crossing", "two chords interleave in the outer order");

  auto offset = [&](Vertex from, Vertex to) { return (pos[to] - pos[from] + n) % n; };
  // Rotation at each vertex: neighbors by increasing offset.
  std::vector<std::vector<Vertex>> rotation(n);
  for (Vertex v = 0; v < n; ++v) {
    rotation[v] = g.neighbors(v);
    std::sort(rotation[v].begin(), rotation[v].end(),
              [&](Vertex a, Vertex b) { return offset(v, a) < offset(v, b); });
  }
  // Darts indexed by (vertex, rotation slot).
  std::vector<int> first(n + 1, 0);
  for (Vertex v = 0; v < n; ++v) first[v + 1] = first[v] + static_cast<int>(rotation[v].size());
  auto dart_of = [&](Vertex u, Vertex v) {
    const auto& r = rotation[u];
    int slot = static_cast<int>(std::find(r.begin(), r.end(), v) - r.begin());
    return first[u] + slot;
  };
  std::vector<Vertex> dart_tail(first[n]), dart_head(first[n]);
  for (Vertex v = 0; v < n; ++v)
    for (std::size_t i = 0; i < rotation[v].size(); ++i) {
      dart_tail[first[v] + i] = v;
      dart_head[first[v] + i] = rotation[v][i];
    }

  std::vector<char> seen(first[n], 0);
  FaceSet fs;
  for (int d0 = 0; d0 < first[n]; ++d0) {
    if (seen[d0]) continue;
    std::vector<Vertex> walk;
    bool wrapped = false;
    int d = d0;
    while (!seen[d]) {
      seen[d] = 1;
      Vertex u = dart_tail[d];
      Vertex v = dart_head[d];
      walk.push_back(u);
      const auto& r = rotation[v];
      int back = offset(v, u);
      Vertex w = -1;
      for (Vertex x : r)
        if (offset(v, x) < back) w = x;
      if (w < 0) {
        wrapped = true;
        w = r.back();
      }
      d = dart_of(v, w);
    }
    if (!wrapped) fs.faces.push_back(canonical_cycle(std::move(walk)));
  }
  std::sort(fs.faces.begin(), fs.faces.end());
  if (static_cast<int>(fs.faces.size()) != g.size() - n + 1)
    fail(ErrorKind::internal, "face-count", "bounded face count disagrees with Euler's formula");
  return fs;
}

WeakDual weak_dual(const FaceSet& fs, const Graph& g) {
  WeakDual wd;
  wd.face_count = static_cast<int>(fs.faces.size());
  wd.degree.assign(wd.face_count, 0);
  std::map<Edge, std::vector<int>> faces_on_edge;
  for (int f = 0; f < wd.face_count; ++f) {
    const auto& c = fs.faces[f];
    for (std::size_t i = 0; i < c.size(); ++i) faces_on_edge[make_edge(c[i], c[(i + 1) % c.size()])].push_back(f);
  }
  for (const auto& [e, list] : faces_on_edge) {
    if (list.size() > 2) fail(ErrorKind::internal, "face-set", "an edge borders more than two bounded faces");
    if (list.size() == 2) wd.links.emplace_back(std::min(list[0], list[1]), std::max(list[0], list[1]));
  }
  std::sort(wd.links.begin(), wd.links.end());
  wd.links.erase(std::unique(wd.links.begin(), wd.links.end()), wd.links.end());

  std::vector<int> parent(wd.face_count);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (auto [a, b] : wd.links) {
    int ra = find(a), rb = find(b);
    if (ra == rb) fail(ErrorKind::internal, "dual-cycle", "weak dual contains a cycle");
    parent[ra] = rb;
    ++wd.degree[a];
    ++wd.degree[b];
  }

  for (int f = 0; f < wd.face_count; ++f) {
    if (wd.degree[f] > 1) continue;
    const auto& c = fs.faces[f];
    const int len = static_cast<int>(c.size());
    std::vector<int> heavy;
    for (int i = 0; i < len; ++i)
      if (g.degree(c[i]) >= 3) heavy.push_back(i);
    bool pendant = heavy.size() == 1;
    if (heavy.size() == 2) {
      int gap = heavy[1] - heavy[0];
      pendant = gap == 1 || gap == len - 1;
    }
    if (pendant) wd.pendant_faces.push_back(f);
  }
  return wd;
}

namespace {

bool place_next(const Graph& g, std::vector<Vertex>& order, std::vector<int>& pos) {
  const int n = g.order();
  const int p = static_cast<int>(order.size());
  if (p == n) return true;
  for (Vertex v = 1; v < n; ++v) {
    if (pos[v] >= 0) continue;
    pos[v] = p;
    bool ok = true;
    for (Vertex x : g.neighbors(v)) {
      if (pos[x] < 0 || pos[x] == p) continue;
      int lo = pos[x];
      for (auto [a, b] : g.edges()) {
        if (pos[a] < 0 || pos[b] < 0 || a == x || b == x || a == v || b == v) continue;
        bool ia = lo < pos[a] && pos[a] < p;
        bool ib = lo < pos[b] && pos[b] < p;
        if (ia != ib) {
          ok = false;
          break;
        }
      }
      if (!ok) break;
    }
    if (ok) {
      order.push_back(v);
      if (place_next(g, order, pos)) return true;
      order.pop_back();
    }
    pos[v] = -1;
  }
  return false;
}

}  // namespace

std::optional<std::vector<Vertex>> find_outer_order(const Graph& g) {
  const int n = g.order();
  if (n > 10) fail(ErrorKind::precondition, "recognition-size", "outerplanarity search is limited to 10 vertices");
  if (!g.connected()) fail(ErrorKind::precondition, "disconnected", "outerplanarity search needs a connected graph");
  if (n == 0) return std::vector<Vertex>{};
  if (n >= 2 && g.size() > 2 * n - 3) return std::nullopt;
  std::vector<Vertex> order{0};
  std::vector<int> pos(n, -1);
  pos[0] = 0;
  if (place_next(g, order, pos)) return order;
  return std::nullopt;
}

}  // namespace ttone
