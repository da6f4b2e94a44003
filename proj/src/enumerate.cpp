#include "ttone/enumerate.hpp"

#include <unordered_map>

#include "ttone/errors.hpp"
#include "ttone/isomorphism.hpp"

namespace ttone {

namespace {

// Keeps the first graph of each isomorphism class.
class ClassFilter {
 public:
  bool insert(const Graph& g) {
    auto& bucket = buckets_[wl_hash(g)];
    for (const Graph& h : bucket)
      if (are_isomorphic(g, h)) return false;
    bucket.push_back(g);
    return true;
  }

 private:
  std::unordered_map<std::uint64_t, std::vector<Graph>> buckets_;
};

bool crosses(Edge a, Edge b) {
  return (a.first < b.first && b.first < a.second && a.second < b.second) ||
         (b.first < a.first && a.first < b.second && b.second < a.second);
}

}  // namespace

std::vector<OuterplaneEmbedding> enumerate_subcubic_outerplanar(int n) {
  if (n < 1) fail(ErrorKind::invalid_input, "bad-params", "enumeration needs n >= 1");
  std::vector<Edge> chords;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) chords.push_back({i, j});
  std::vector<Vertex> identity(n);
  for (int i = 0; i < n; ++i) identity[i] = i;

  std::vector<OuterplaneEmbedding> out;
  ClassFilter filter;
  std::vector<Edge> chosen;
  std::vector<int> deg(n, 0);
  auto search = [&](auto&& self, std::size_t i) -> void {
    if (i == chords.size()) {
      if (static_cast<int>(chosen.size()) < n - 1) return;
      Graph g(n, chosen);
      if (!g.connected()) return;
      if (filter.insert(g)) out.push_back({g, identity});
      return;
    }
    self(self, i + 1);
    Edge e = chords[i];
    if (deg[e.first] == 3 || deg[e.second] == 3) return;
    for (const Edge& c : chosen)
      if (crosses(c, e)) return;
    chosen.push_back(e);
    ++deg[e.first];
    ++deg[e.second];
    self(self, i + 1);
    --deg[e.first];
    --deg[e.second];
    chosen.pop_back();
  };
  search(search, 0);
  return out;
}

std::vector<HalinStructure> enumerate_cubic_halin(int max_n) {
  struct Shape {
    int n;
    std::vector<Edge> tree;
    std::vector<Vertex> leaves;
  };
  auto build = [](const Shape& s) {
    std::vector<Edge> edges = s.tree;
    for (std::size_t i = 0; i < s.leaves.size(); ++i)
      edges.push_back(make_edge(s.leaves[i], s.leaves[(i + 1) % s.leaves.size()]));
    return validate_halin(Graph(s.n, edges), s.tree, s.leaves);
  };

  if (max_n > 18) fail(ErrorKind::precondition, "too-large", "cubic Halin enumeration is limited to 18 vertices");
  std::vector<HalinStructure> out;
  if (max_n < 4) return out;
  std::vector<Shape> level{{4, {{0, 1}, {0, 2}, {0, 3}}, {1, 2, 3}}};
  out.push_back(build(level.front()));
  for (int n = 6; n <= max_n; n += 2) {
    std::vector<Shape> next;
    ClassFilter filter;
    for (const Shape& s : level)
      for (std::size_t i = 0; i < s.leaves.size(); ++i) {
        Shape t{s.n + 2, s.tree, {}};
        Vertex v = s.leaves[i];
        t.tree.push_back({v, s.n});
        t.tree.push_back({v, s.n + 1});
        for (Vertex u : s.leaves) {
          if (u != v) {
            t.leaves.push_back(u);
          } else {
            t.leaves.push_back(s.n);
            t.leaves.push_back(s.n + 1);
          }
        }
        HalinStructure h = build(t);
        if (filter.insert(h.graph)) out.push_back(h);
        next.push_back(std::move(t));
      }
    level = std::move(next);
  }
  return out;
}

}  // namespace ttone
