#pragma once

// Reference implementations used only by the tests. They share no code with
// the library beyond the Graph and Label containers.

#include <algorithm>
#include <climits>
#include <cmath>
#include <cstdint>
#include <vector>

#include "ttone/graph.hpp"
#include "ttone/labeling.hpp"

namespace oracle {

using ttone::Edge;
using ttone::Graph;
using ttone::Vertex;

inline std::vector<std::vector<int>> all_pairs(const Graph& g) {
  const int n = g.order();
  const int inf = INT_MAX / 4;
  std::vector<std::vector<int>> d(n, std::vector<int>(n, inf));
  for (int i = 0; i < n; ++i) d[i][i] = 0;
  for (auto [u, v] : g.edges()) d[u][v] = d[v][u] = 1;
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
  return d;
}

inline int inf_distance() { return INT_MAX / 4; }

inline int common(const std::vector<int>& a, const std::vector<int>& b) {
  int c = 0;
  for (int x : a)
    if (std::find(b.begin(), b.end(), x) != b.end()) ++c;
  return c;
}

// Labels as explicit color lists; mode 0 = t-tone, 1 = good 2-tone, 2 = 3-good.
inline bool pair_ok(int mode, int d, int shared) {
  if (d >= inf_distance()) return true;
  if (mode == 0) return shared < d;
  if (mode == 1) return shared < d && (d != 2 || shared == 1);
  if (d == 1) return shared == 0;
  if (d == 2) return shared == 1;
  return true;
}

inline std::vector<std::pair<int, int>> violations(const Graph& g, const std::vector<std::vector<int>>& labels,
                                                   int mode) {
  auto d = all_pairs(g);
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < g.order(); ++u)
    for (int v = u + 1; v < g.order(); ++v)
      if (!pair_ok(mode, d[u][v], common(labels[u], labels[v]))) out.push_back({u, v});
  return out;
}

inline std::vector<std::vector<int>> lists(const ttone::Labeling& f) {
  std::vector<std::vector<int>> out;
  for (auto l : f.labels()) out.push_back(l.colors());
  return out;
}

// Smallest k admitting a t-tone k-coloring, by plain enumeration of label
// tuples in vertex order with pairwise checks (tiny graphs only).
inline int brute_tau(const Graph& g, int t, int k_max = 16) {
  const int n = g.order();
  auto d = all_pairs(g);
  for (int k = t; k <= k_max; ++k) {
    std::vector<std::vector<int>> labels;
    std::vector<int> cur;
    auto gen = [&](auto&& self, int next) -> void {
      if (static_cast<int>(cur.size()) == t) {
        labels.push_back(cur);
        return;
      }
      for (int c = next; c <= k; ++c) {
        cur.push_back(c);
        self(self, c + 1);
        cur.pop_back();
      }
    };
    gen(gen, 1);
    std::vector<int> choice(n, -1);
    auto place = [&](auto&& self, int v) -> bool {
      if (v == n) return true;
      for (int i = 0; i < static_cast<int>(labels.size()); ++i) {
        bool ok = true;
        for (int u = 0; u < v && ok; ++u)
          ok = pair_ok(0, d[u][v], common(labels[choice[u]], labels[i]));
        if (!ok) continue;
        choice[v] = i;
        if (self(self, v + 1)) return true;
      }
      return false;
    };
    if (place(place, 0)) return k;
  }
  return -1;
}

// K4 - e: four vertices spanning at least five edges.
inline bool has_k4e(const Graph& g) {
  const int n = g.order();
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c)
        for (int d = c + 1; d < n; ++d) {
          int e = g.adjacent(a, b) + g.adjacent(a, c) + g.adjacent(a, d) + g.adjacent(b, c) + g.adjacent(b, d) +
                  g.adjacent(c, d);
          if (e >= 5) return true;
        }
  return false;
}

// Cycle of exactly `len` vertices (as a subgraph), by trying every ordered
// sequence of distinct vertices.
inline bool has_cycle(const Graph& g, int len) {
  const int n = g.order();
  std::vector<int> path;
  std::vector<char> used(n, 0);
  auto dfs = [&](auto&& self) -> bool {
    if (static_cast<int>(path.size()) == len) return g.adjacent(path.back(), path.front());
    for (int v = path.front() + 1; v < n; ++v)
      if (!used[v] && g.adjacent(path.back(), v)) {
        used[v] = 1;
        path.push_back(v);
        if (self(self)) return true;
        path.pop_back();
        used[v] = 0;
      }
    return false;
  };
  for (int s = 0; s < n; ++s) {
    path = {s};
    std::fill(used.begin(), used.end(), 0);
    used[s] = 1;
    if (dfs(dfs)) return true;
  }
  return false;
}

// Closed-form tree value with floating point, as an independent check of the integer code.
inline int tree_formula_float(int delta) {
  double k = (5.0 + std::sqrt(8.0 * delta + 1.0)) / 2.0;
  int r = static_cast<int>(std::ceil(k - 1e-9));
  return r;
}

}  // namespace oracle
