#include "ttone/halin_colorer.hpp"

#include <algorithm>
#include <array>

#include "ttone/bounds.hpp"
#include "ttone/errors.hpp"
#include "ttone/extension.hpp"
#include "ttone/tree_colorer.hpp"
#include "ttone/verify.hpp"

namespace ttone {

namespace {

Label L(int a, int b) { return Label{a, b}; }

bool is_llabel(Label l) {
  return (l & Label{6, 7}).size() == 1 && (l & Label{1, 2, 3, 4, 5}).size() == 1;
}

Vertex parent_of_leaf(const HalinStructure& h, Vertex leaf) { return h.tree_adjacency[leaf].front(); }

// Tries to put `label` on v in place of its current label.
bool place(const DistanceTable& dist, Labeling& f, Vertex v, Label label) {
  Label old = f[v];
  f.clear(v);
  if (fits(dist, f, v, label, Mode::tone)) {
    f.set(v, label);
    return true;
  }
  f.set(v, old);
  return false;
}

Label first_valid(const DistanceTable& dist, Labeling& f, Vertex v, std::initializer_list<Label> options) {
  Label old = f[v];
  f.clear(v);
  for (Label l : options)
    if (fits(dist, f, v, l, Mode::tone)) {
      f.set(v, l);
      return l;
    }
  f.set(v, old);
  return Label{};
}

}  // namespace

HalinColoring color_cubic_halin7(const HalinStructure& h) {
  const Graph& g = h.graph;
  const int n = g.order();
  for (Vertex v = 0; v < n; ++v)
    if (g.degree(v) != 3) fail(ErrorKind::precondition, "not-cubic", "graph is not 3-regular");
  if (n < 6) fail(ErrorKind::precondition, "too-small", "cubic Halin graphs below six vertices are K4");

  HalinColoring out;
  out.k = 7;
  Labeling f(n, 2, 7);
  DistanceTable dist(g, 2);

  // Inner tree.
  const auto& inner = h.internal_vertices;
  TreeColoring tc = color_tree_2tone(induced_subgraph(g, inner));
  if (tc.k > 5) fail(ErrorKind::internal, "inner-tree", "inner tree needs more than five colors");
  for (std::size_t i = 0; i < inner.size(); ++i) f.set(inner[i], tc.labeling[static_cast<Vertex>(i)]);

  FanDecomposition fan = deepest_fan(h, inner.front());
  const Vertex x = fan.x;
  const Vertex y = fan.parent;
  if (fan.leaf_run.size() != 2) fail(ErrorKind::internal, "fan", "cubic fan must have two leaves");

  // Rim x1 x2 ... xl with x1, xl the leaves of x.
  const int rim = static_cast<int>(h.leaf_order.size());
  int start = static_cast<int>(std::find(h.leaf_order.begin(), h.leaf_order.end(), fan.leaf_run[1]) - h.leaf_order.begin());
  std::vector<Vertex> xs(rim + 1, -1);
  for (int i = 1; i <= rim; ++i) xs[i] = h.leaf_order[(start + i - 1) % rim];
  if (xs[rim] != fan.leaf_run[0]) fail(ErrorKind::internal, "fan", "fan leaves are not consecutive on the rim");
  const int l = rim;

  std::vector<Label> low = all_labels(2, 5);
  Label first = first_fitting(dist, f, xs[1], low, Mode::tone);
  if (first.empty()) fail(ErrorKind::internal, "first-leaf", "no candidate label for x1");
  f.set(xs[1], first);

  std::vector<Label> llabels;
  for (Label cand : all_labels(2, 7))
    if (is_llabel(cand)) llabels.push_back(cand);
  for (int i = 2; i <= l - 1; ++i) {
    Label lab = first_fitting(dist, f, xs[i], llabels, Mode::tone);
    if (lab.empty()) fail(ErrorKind::internal, "l-label", "no L-label fits a rim leaf");
    f.set(xs[i], lab);
  }
  for (int i = 2; i <= l - 1; ++i)
    if (!is_llabel(f[xs[i]])) fail(ErrorKind::internal, "l-label", "rim leaf lost its L-label");

  // Normalize: f(x) = 12, f(x1) = 34, f(y) = 35, 6 in L.
  Label fx = f[x], fx1 = f[xs[1]], fy = f[y], last = f[xs[l - 1]];
  Label common = fx1 & fy;
  if (common.size() != 1 || !(fx & fx1).empty() || !(fx & fy).empty())
    fail(ErrorKind::internal, "normalize", "unexpected labels around the fan");
  Label llow = last & Label{1, 2, 3, 4, 5};
  Label lhigh = last & Label{6, 7};
  std::vector<Color> image(8, 0);
  Color one = (fx & llow).empty() ? fx.colors()[0] : llow.colors()[0];
  image[one] = 1;
  image[(fx - Label{one}).colors()[0]] = 2;
  image[common.colors()[0]] = 3;
  image[(fx1 - common).colors()[0]] = 4;
  image[(fy - common).colors()[0]] = 5;
  image[lhigh.colors()[0]] = 6;
  image[(Label{6, 7} - lhigh).colors()[0]] = 7;
  ColorPermutation pi = ColorPermutation::from_images(image);
  Labeling g2 = pi.apply(f);
  const Label lnorm = g2[xs[l - 1]];
  const Vertex yl1 = parent_of_leaf(h, xs[l - 1]);
  const Vertex y2 = parent_of_leaf(h, xs[2]);
  const Vertex x1 = xs[1], xl = xs[l];

  bool done = false;
  if (!(lnorm & Label{1, 2}).empty()) {
    out.final_case = 2;
    if (lnorm != L(1, 6)) fail(ErrorKind::internal, "normalize", "case 2 label is not 16");
    if (place(dist, g2, x, L(6, 7))) {
      if (g2[yl1] != L(2, 5)) {
        done = place(dist, g2, xl, L(2, 5));
      } else {
        Label lx2 = g2[xs[2]];
        if (!lx2.contains(2) && g2[y2] != L(2, 5)) {
          done = place(dist, g2, x1, L(2, 5)) && place(dist, g2, xl, L(3, 4));
        } else if (lx2.contains(2)) {
          Label got = first_valid(dist, g2, x1, {L(1, 3), L(1, 4)});
          if (got == L(1, 3)) done = place(dist, g2, xl, L(2, 4));
          if (got == L(1, 4)) done = place(dist, g2, xl, L(2, 3));
        } else {
          done = place(dist, g2, x1, L(4, 5)) && place(dist, g2, xl, L(2, 3));
        }
      }
    }
  } else {
    out.final_case = 1;
    if (place(dist, g2, x, L(6, 7))) {
      if (g2[yl1] != L(1, 2)) {
        done = place(dist, g2, xl, L(1, 2));
      } else {
        // Last-leaf label per x1 choice and L in {36, 56, 46}.
        static const std::array<std::array<Label, 3>, 4> table = {{
            {L(1, 4), L(1, 4), L(1, 5)},
            {L(2, 4), L(2, 4), L(2, 5)},
            {L(1, 5), L(1, 3), L(1, 3)},
            {L(2, 5), L(2, 3), L(2, 3)},
        }};
        static const std::array<Label, 4> firsts = {L(2, 3), L(1, 3), L(2, 4), L(1, 4)};
        int col = lnorm == L(3, 6) ? 0 : lnorm == L(5, 6) ? 1 : 2;
        Label got = first_valid(dist, g2, x1, {firsts[0], firsts[1], firsts[2], firsts[3]});
        for (int r = 0; r < 4; ++r)
          if (got == firsts[r]) done = place(dist, g2, xl, table[r][col]);
      }
    }
  }

  if (!done) {
    out.search_fallback = true;
    g2.clear(xl);
    std::vector<Vertex> scope{xl};
    if (!extend_labeling(g, dist, g2, scope, Mode::tone))
      fail(ErrorKind::internal, "last-leaf", "no completion for the last rim leaf");
  }

  out.labeling = pi.inverse().apply(g2);
  if (!verify(g, out.labeling, Mode::tone).valid || out.labeling.colors_used() > 7)
    fail(ErrorKind::internal, "invalid-output", "cubic Halin coloring failed verification");
  return out;
}

namespace {

// Structure on `keep` (ascending local ids) with the given edges and leaf order in old ids.
HalinStructure rebuild(const HalinStructure& h, const std::vector<Vertex>& keep, const std::vector<Edge>& edges,
                   const std::vector<Edge>& tree, const std::vector<Vertex>& leaves) {
  std::vector<int> local(h.graph.order(), -1);
  for (std::size_t i = 0; i < keep.size(); ++i) local[keep[i]] = static_cast<int>(i);
  auto map_edges = [&](const std::vector<Edge>& list) {
    std::vector<Edge> out;
    for (auto [a, b] : list) out.push_back(make_edge(local[a], local[b]));
    return out;
  };
  std::vector<Vertex> order;
  for (Vertex v : leaves) order.push_back(local[v]);
  std::vector<Edge> mapped = map_edges(edges);
  return validate_halin(Graph(static_cast<int>(keep.size()), mapped), map_edges(tree), order);
}

Labeling color_wheel(const HalinStructure& h, int k) {
  const Graph& g = h.graph;
  Labeling f(g.order(), 2, k);
  f.set(h.internal_vertices.front(), L(1, 2));
  std::vector<Label> candidates;
  for (Label l : all_labels(2, k))
    if ((l & L(1, 2)).empty()) candidates.push_back(l);
  DistanceTable dist(g, 2);
  const auto& rim = h.leaf_order;
  const std::uint64_t budget = 1000 + 64ULL * rim.size() * rim.size();
  std::uint64_t nodes = 0;
  auto search = [&](auto&& self, std::size_t i) -> bool {
    if (i == rim.size()) return true;
    for (Label l : candidates) {
      if (++nodes > budget) return false;
      if (!fits(dist, f, rim[i], l, Mode::tone)) continue;
      f.set(rim[i], l);
      if (self(self, i + 1)) return true;
      f.clear(rim[i]);
    }
    return false;
  };
  if (!search(search, 0)) fail(ErrorKind::internal, "wheel-budget", "wheel rim search ran out of budget");
  return f;
}

Labeling color_halin_level(const HalinStructure& h, int k, int& reductions) {
  const Graph& g = h.graph;
  if (h.internal_vertices.size() == 1) return color_wheel(h, k);

  FanDecomposition fan = deepest_fan(h, h.internal_vertices.front());
  const auto& run = fan.leaf_run;
  const int rim = static_cast<int>(h.leaf_order.size());
  auto rim_pos = [&](Vertex v) {
    return static_cast<int>(std::find(h.leaf_order.begin(), h.leaf_order.end(), v) - h.leaf_order.begin());
  };

  std::vector<Vertex> removed;
  std::vector<Edge> added;
  std::vector<Vertex> leaves;
  if (run.size() == 2) {
    Vertex x1 = run[0], x2 = run[1];
    Vertex before = h.leaf_order[(rim_pos(x1) + rim - 1) % rim];
    Vertex after = h.leaf_order[(rim_pos(x2) + 1) % rim];
    removed = {x1, x2};
    added = {make_edge(before, fan.x), make_edge(fan.x, after)};
    for (Vertex v : h.leaf_order) {
      if (v == x1) leaves.push_back(fan.x);
      else if (v != x2) leaves.push_back(v);
    }
  } else {
    removed = {run[1]};
    added = {make_edge(run[0], run[2])};
    for (Vertex v : h.leaf_order)
      if (v != run[1]) leaves.push_back(v);
  }

  std::vector<char> gone(g.order(), 0);
  for (Vertex v : removed) gone[v] = 1;
  std::vector<Vertex> keep;
  for (Vertex v = 0; v < g.order(); ++v)
    if (!gone[v]) keep.push_back(v);
  std::vector<Edge> edges = added, tree;
  for (const Edge& e : g.edges())
    if (!gone[e.first] && !gone[e.second]) edges.push_back(e);
  for (const Edge& e : h.tree_edges)
    if (!gone[e.first] && !gone[e.second]) tree.push_back(e);

  ++reductions;
  HalinStructure smaller = rebuild(h, keep, edges, tree, leaves);
  Labeling sub = color_halin_level(smaller, k, reductions);
  Labeling f(g.order(), 2, k);
  for (std::size_t i = 0; i < keep.size(); ++i) f.set(keep[i], sub[static_cast<Vertex>(i)]);

  DistanceTable dist(g, 2);
  const auto candidates = all_labels(2, k);
  for (Vertex v : removed) {
    Label l = first_fitting(dist, f, v, candidates, Mode::tone);
    if (l.empty()) fail(ErrorKind::internal, "extension-failed", "no label left for a removed fan leaf");
    f.set(v, l);
  }
  return f;
}

}  // namespace

HalinColoring color_halin(const HalinStructure& h) {
  HalinColoring out;
  out.k = halin_bound(h.graph.max_degree());
  out.labeling = color_halin_level(h, out.k, out.reductions);
  if (!verify(h.graph, out.labeling, Mode::tone).valid)
    fail(ErrorKind::internal, "invalid-output", "Halin coloring failed verification");
  return out;
}

}  // namespace ttone
