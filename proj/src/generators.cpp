#include "ttone/generators.hpp"

#include <algorithm>
#include <limits>

#include "ttone/errors.hpp"

namespace ttone {

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound == 0) fail(ErrorKind::internal, "rng-bound", "bounded draw needs a positive bound");
  const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
  const std::uint64_t limit = max - (max % bound + 1) % bound;  // accept x <= limit
  std::uint64_t x;
  do {
    x = engine_();
  } while (x > limit);
  return x % bound;
}

namespace {

void need(bool ok, const std::string& msg) {
  if (!ok) fail(ErrorKind::invalid_input, "bad-params", msg);
}

std::vector<Vertex> iota(int n) {
  std::vector<Vertex> v(n);
  for (int i = 0; i < n; ++i) v[i] = i;
  return v;
}

GraphBundle cycle(int n) {
  need(n >= 3, "cycle needs n >= 3");
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i) e.push_back(make_edge(i, (i + 1) % n));
  GraphBundle b;
  b.graph = Graph(n, e);
  b.outer_order = iota(n);
  return b;
}

GraphBundle path(int n) {
  need(n >= 1, "path needs n >= 1");
  std::vector<Edge> e;
  for (int i = 0; i + 1 < n; ++i) e.push_back({i, i + 1});
  GraphBundle b;
  b.graph = Graph(n, e);
  b.outer_order = iota(n);
  return b;
}

GraphBundle complete(int n) {
  need(n >= 1, "complete graph needs n >= 1");
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) e.push_back({i, j});
  GraphBundle b;
  b.graph = Graph(n, e);
  if (n <= 3) b.outer_order = iota(n);
  return b;
}

GraphBundle k4e() {
  GraphBundle b;
  b.graph = Graph(4, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}});
  b.outer_order = std::vector<Vertex>{0, 1, 3, 2};
  return b;
}

GraphBundle fig1() {
  GraphBundle b;
  b.graph = Graph(5, {{0, 1}, {1, 4}, {3, 4}, {2, 3}, {0, 2}, {1, 2}});
  b.outer_order = std::vector<Vertex>{0, 1, 4, 3, 2};
  return b;
}

GraphBundle wheel(int d) {
  need(d >= 3, "wheel needs d >= 3");
  std::vector<Edge> e, tree;
  std::vector<Vertex> rim;
  for (int i = 1; i <= d; ++i) {
    tree.push_back({0, i});
    e.push_back({0, i});
    e.push_back(make_edge(i, i % d + 1));
    rim.push_back(i);
  }
  GraphBundle b;
  b.graph = Graph(d + 1, e);
  b.tree_edges = tree;
  b.leaf_order = rim;
  return b;
}

GraphBundle outerplanar(int n, const std::string& faces, Rng& rng) {
  need(n >= 3, "outerplanar needs n >= 3");
  std::vector<int> sizes;
  if (faces == "any")
    sizes = {3, 4, 5, 6, 7, 8, 9};
  else if (faces == "long")
    sizes = {5, 6, 8, 9};
  else
    need(false, "faces must be 'any' or 'long'");

  std::vector<Vertex> order;
  std::vector<Edge> edges;
  std::vector<int> deg;
  std::vector<int> used;
  auto add_vertex = [&]() {
    deg.push_back(0);
    return static_cast<Vertex>(deg.size() - 1);
  };
  auto link = [&](Vertex a, Vertex b) {
    edges.push_back(make_edge(a, b));
    ++deg[a];
    ++deg[b];
  };
  auto pick_size = [&](int room) {
    std::vector<int> ok;
    for (int s : sizes)
      if (s <= room) ok.push_back(s);
    return ok.empty() ? 0 : ok[rng.below(ok.size())];
  };
  // New vertices inserted into the outer order right after position `at`.
  auto insert_after = [&](std::size_t at, const std::vector<Vertex>& fresh) {
    order.insert(order.begin() + static_cast<std::ptrdiff_t>(at + 1), fresh.begin(), fresh.end());
  };

  int s0 = pick_size(n);
  need(s0 > 0, "no face length fits n");
  for (int i = 0; i < s0; ++i) order.push_back(add_vertex());
  for (int i = 0; i < s0; ++i) link(order[i], order[(i + 1) % s0]);
  used.push_back(s0);

  while (static_cast<int>(deg.size()) < n) {
    const int room = n - static_cast<int>(deg.size());
    std::vector<std::size_t> low, isolated_ish, side;
    for (std::size_t i = 0; i < order.size(); ++i) {
      Vertex v = order[i], w = order[(i + 1) % order.size()];
      if (deg[v] <= 2) low.push_back(i);
      if (deg[v] <= 1) isolated_ish.push_back(i);
      if (deg[v] == 2 && deg[w] == 2 &&
          std::find(edges.begin(), edges.end(), make_edge(v, w)) != edges.end())
        side.push_back(i);
    }
    std::vector<int> kinds{0};
    if (!side.empty() && pick_size(room + 2) > 0) kinds.push_back(1);
    if (!isolated_ish.empty() && pick_size(room + 1) > 0) kinds.push_back(2);
    if (!low.empty() && pick_size(room) > 0) kinds.push_back(3);
    if (low.empty()) fail(ErrorKind::internal, "generator-stuck", "no vertex of degree at most two");
    int kind = kinds[rng.below(kinds.size())];
    if (kind == 0) {  // pendant vertex
      std::size_t at = low[rng.below(low.size())];
      Vertex v = order[at];
      Vertex w = add_vertex();
      link(v, w);
      insert_after(at, {w});
    } else if (kind == 1) {  // face glued along an outer edge
      std::size_t at = side[rng.below(side.size())];
      int s = pick_size(room + 2);
      Vertex u = order[at], v = order[(at + 1) % order.size()];
      std::vector<Vertex> fresh;
      for (int i = 0; i < s - 2; ++i) fresh.push_back(add_vertex());
      link(u, fresh.front());
      for (std::size_t i = 0; i + 1 < fresh.size(); ++i) link(fresh[i], fresh[i + 1]);
      link(fresh.back(), v);
      insert_after(at, fresh);
      used.push_back(s);
    } else if (kind == 2) {  // face glued at one vertex
      std::size_t at = isolated_ish[rng.below(isolated_ish.size())];
      int s = pick_size(room + 1);
      Vertex v = order[at];
      std::vector<Vertex> fresh;
      for (int i = 0; i < s - 1; ++i) fresh.push_back(add_vertex());
      link(v, fresh.front());
      for (std::size_t i = 0; i + 1 < fresh.size(); ++i) link(fresh[i], fresh[i + 1]);
      link(fresh.back(), v);
      insert_after(at, fresh);
      used.push_back(s);
    } else {  // cycle hung on a bridge
      std::size_t at = low[rng.below(low.size())];
      int s = pick_size(room);
      Vertex v = order[at];
      std::vector<Vertex> fresh;
      for (int i = 0; i < s; ++i) fresh.push_back(add_vertex());
      link(v, fresh.front());
      for (int i = 0; i < s; ++i) link(fresh[i], fresh[(i + 1) % s]);
      insert_after(at, fresh);
      used.push_back(s);
    }
  }
  GraphBundle b;
  b.graph = Graph(n, edges);
  b.outer_order = order;
  b.face_sizes = used;
  return b;
}

// Tree grown from a star with d leaves; each step turns a random leaf into an
// internal vertex with between 2 and d - 1 new children.
GraphBundle halin(int n, int d, Rng& rng) {
  need(d >= 3, "halin needs d >= 3");
  need(n >= d + 1 && n != d + 2, "halin needs n >= d + 1 and n != d + 2");
  if (d == 3) need((n - 4) % 2 == 0, "with d = 3 the order must be even");
  std::vector<std::vector<Vertex>> children(1);
  std::vector<Vertex> leaves;
  for (int i = 1; i <= d; ++i) {
    children[0].push_back(i);
    children.emplace_back();
    leaves.push_back(i);
  }
  std::vector<Edge> tree;
  for (int i = 1; i <= d; ++i) tree.push_back({0, i});
  while (static_cast<int>(children.size()) < n) {
    const int room = n - static_cast<int>(children.size());
    std::vector<int> counts;
    for (int c = 2; c <= std::min(d - 1, room); ++c)
      if (room - c != 1) counts.push_back(c);
    if (counts.empty()) fail(ErrorKind::internal, "generator-stuck", "no expansion fits the remaining size");
    int c = counts[rng.below(counts.size())];
    std::size_t li = rng.below(leaves.size());
    Vertex leaf = leaves[li];
    leaves.erase(leaves.begin() + static_cast<std::ptrdiff_t>(li));
    for (int i = 0; i < c; ++i) {
      Vertex v = static_cast<Vertex>(children.size());
      children.emplace_back();
      children[leaf].push_back(v);
      tree.push_back(make_edge(leaf, v));
      leaves.push_back(v);
    }
  }
  std::vector<Vertex> order;
  std::vector<Vertex> stack{0};
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    if (v != 0 && children[v].empty()) order.push_back(v);
    for (auto it = children[v].rbegin(); it != children[v].rend(); ++it) stack.push_back(*it);
  }
  std::vector<Edge> edges = tree;
  for (std::size_t i = 0; i < order.size(); ++i) edges.push_back(make_edge(order[i], order[(i + 1) % order.size()]));
  std::sort(tree.begin(), tree.end());
  GraphBundle b;
  b.graph = Graph(n, edges);
  b.tree_edges = tree;
  b.leaf_order = order;
  return b;
}

}  // namespace

bool family_is_randomized(const std::string& family) {
  return family == "outerplanar" || family == "halin" || family == "cubicHalin";
}

GraphBundle generate(const std::string& family, const GeneratorParams& params, std::optional<std::uint64_t> seed) {
  if (family_is_randomized(family) && !seed)
    fail(ErrorKind::invalid_input, "seed-required", family + " needs an explicit seed");
  GraphBundle b;
  if (family == "cycle") {
    b = cycle(params.n);
  } else if (family == "path") {
    b = path(params.n);
  } else if (family == "complete") {
    b = complete(params.n);
  } else if (family == "k4e") {
    b = k4e();
  } else if (family == "wheel") {
    b = wheel(params.d);
  } else if (family == "fig1") {
    b = fig1();
  } else if (family == "outerplanar") {
    Rng rng(*seed);
    b = outerplanar(params.n, params.faces, rng);
  } else if (family == "halin") {
    Rng rng(*seed);
    b = halin(params.n, params.d, rng);
  } else if (family == "cubicHalin") {
    need(params.n >= 4 && params.n % 2 == 0, "cubicHalin needs an even n >= 4");
    Rng rng(*seed);
    b = halin(params.n, 3, rng);
  } else {
    fail(ErrorKind::invalid_input, "unknown-family", "unknown family: " + family);
  }
  b.family = family;
  b.params = params;
  if (family_is_randomized(family)) b.seed = seed;
  return b;
}

}  // namespace ttone
