#include "ttone/isomorphism.hpp"

#include <algorithm>
#include <vector>

namespace ttone {

namespace {

std::uint64_t mix(std::uint64_t h, std::uint64_t x) {
  h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

// Refined colors; colors are comparable across graphs refined with the same rounds.
std::vector<std::uint64_t> refine(const Graph& g, int rounds) {
  std::vector<std::uint64_t> color(g.order());
  for (Vertex v = 0; v < g.order(); ++v) color[v] = static_cast<std::uint64_t>(g.degree(v));
  for (int r = 0; r < rounds; ++r) {
    std::vector<std::uint64_t> next(g.order());
    for (Vertex v = 0; v < g.order(); ++v) {
      std::vector<std::uint64_t> around;
      for (Vertex w : g.neighbors(v)) around.push_back(color[w]);
      std::sort(around.begin(), around.end());
      std::uint64_t h = mix(0, color[v]);
      for (auto c : around) h = mix(h, c);
      next[v] = h;
    }
    color = std::move(next);
  }
  return color;
}

}  // namespace

std::uint64_t wl_hash(const Graph& g, int rounds) {
  std::vector<std::uint64_t> color = refine(g, rounds);
  std::sort(color.begin(), color.end());
  std::uint64_t h = mix(static_cast<std::uint64_t>(g.order()), static_cast<std::uint64_t>(g.size()));
  for (auto c : color) h = mix(h, c);
  return h;
}

bool are_isomorphic(const Graph& a, const Graph& b) {
  const int n = a.order();
  if (n != b.order() || a.size() != b.size()) return false;
  const int rounds = 3;
  auto ca = refine(a, rounds), cb = refine(b, rounds);
  auto sa = ca, sb = cb;
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());
  if (sa != sb) return false;

  // Map a's vertices in BFS-ish order so each new vertex tends to touch mapped ones.
  std::vector<Vertex> order;
  std::vector<char> seen(n, 0);
  for (Vertex s = 0; s < n; ++s) {
    if (seen[s]) continue;
    seen[s] = 1;
    order.push_back(s);
    for (std::size_t head = order.size() - 1; head < order.size(); ++head)
      for (Vertex w : a.neighbors(order[head]))
        if (!seen[w]) {
          seen[w] = 1;
          order.push_back(w);
        }
  }
  std::vector<Vertex> image(n, -1);
  std::vector<char> taken(n, 0);
  auto extend = [&](auto&& self, int i) -> bool {
    if (i == n) return true;
    Vertex v = order[i];
    for (Vertex w = 0; w < n; ++w) {
      if (taken[w] || ca[v] != cb[w]) continue;
      bool ok = true;
      for (int j = 0; j < i && ok; ++j) {
        Vertex u = order[j];
        if (a.adjacent(u, v) != b.adjacent(image[u], w)) ok = false;
      }
      if (!ok) continue;
      image[v] = w;
      taken[w] = 1;
      if (self(self, i + 1)) return true;
      taken[w] = 0;
      image[v] = -1;
    }
    return false;
  };
  return extend(extend, 0);
}

}  // namespace ttone
