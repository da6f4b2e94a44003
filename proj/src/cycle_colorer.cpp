#include "ttone/cycle_colorer.hpp"

#include <algorithm>
#include <string>

#include "ttone/errors.hpp"
#include "ttone/graph.hpp"
#include "ttone/verify.hpp"

namespace ttone {

namespace {

Graph cycle_graph(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.push_back(make_edge(i, (i + 1) % n));
  return Graph(n, edges);
}

Labeling from_sequence(const std::vector<Label>& seq, int t, int k) {
  Labeling f(static_cast<int>(seq.size()), t, k);
  for (std::size_t i = 0; i < seq.size(); ++i) f.set(static_cast<Vertex>(i), seq[i]);
  return f;
}

void check(const Labeling& f, Mode mode, const char* what) {
  if (!verify(cycle_graph(f.order()), f, mode).valid)
    fail(ErrorKind::internal, "cycle-coloring", std::string(what) + " produced an invalid labeling");
}

// Insert one vertex after position 0 of a 3-good 11-colored cycle, following
// the contraction step: normalize v1 = 123, v3 = 456, v4 = 178, v_n ∈ {478, 479, 4910},
// give the new vertex 8 9 11 and relabel v3.
void grow_three_good(std::vector<Label>& seq) {
  const Label v1 = seq[0];
  const Label v3 = seq[1];
  const Label v4 = seq[2];
  const Label vn = seq.back();
  const Label x = seq[3];  // second neighbor of v3 other than v1 once the new vertex is in

  std::vector<Color> image(12, 0);
  std::vector<char> taken(12, 0);
  auto map_to = [&](Color from, Color to) {
    if (image[from] != 0) return false;
    image[from] = to;
    taken[to] = 1;
    return true;
  };
  auto single = [](Label l) {
    auto cs = l.colors();
    if (cs.size() != 1) fail(ErrorKind::internal, "three-good-step", "expected exactly one shared color");
    return cs[0];
  };
  const Color a = single(v1 & v4);
  map_to(a, 1);
  Color next = 2;
  for (Color c : (v1 - Label{a}).colors()) next += map_to(c, next);
  const Color c4 = single(v3 & x);
  map_to(c4, 4);
  next = 5;
  for (Color c : (v3 - Label{c4}).colors()) next += map_to(c, next);
  // A color v4 shares with v_n becomes 7, so v_n reads 478, 479 or 4910.
  std::vector<Color> tail = (v4 - Label{a}).colors();
  std::stable_partition(tail.begin(), tail.end(), [&](Color c) { return vn.contains(c); });
  next = 7;
  for (Color c : tail) next += map_to(c, next);
  next = 9;
  for (Color c : (vn - v3).colors()) next += map_to(c, next);
  next = 1;
  for (Color c = 1; c <= 11; ++c) {
    if (image[c] != 0) continue;
    while (taken[next]) ++next;
    map_to(c, next);
  }
  const ColorPermutation pi = ColorPermutation::from_images(image);
  const ColorPermutation back = pi.inverse();

  const Label new_v2{8, 9, 11};
  const Label new_v3 = pi.apply(x).contains(2) ? Label{2, 5, 6} : Label{2, 4, 5};
  seq[1] = back.apply(new_v3);
  seq.insert(seq.begin() + 1, back.apply(new_v2));
}

}  // namespace

std::optional<Labeling> color_cycle_2tone(int n, int k) {
  if (n < 3) fail(ErrorKind::invalid_input, "cycle-length", "cycles need n >= 3");
  if (k < 2 || k > kMaxColors) fail(ErrorKind::invalid_input, "palette", "invalid palette size");
  const std::vector<Label> labels = all_labels(2, k);
  const int m = static_cast<int>(labels.size());
  auto index_of = [&](Label l) {
    return static_cast<int>(std::find(labels.begin(), labels.end(), l) - labels.begin());
  };
  if (k < 4) return std::nullopt;
  // Colors are interchangeable, so the first two labels can be fixed.
  const int first = index_of(Label{1, 2});
  const int second = index_of(Label{3, 4});
  // parent[i][a * m + b]: predecessor label of state (L_{i-1} = a, L_i = b), -1 when unreachable.
  std::vector<std::vector<int>> parent(n, std::vector<int>(m * m, -1));
  parent[1][first * m + second] = first;
  for (int i = 2; i < n; ++i)
    for (int a = 0; a < m; ++a)
      for (int b = 0; b < m; ++b) {
        if (parent[i - 1][a * m + b] < 0) continue;
        for (int c = 0; c < m; ++c) {
          if (shared(labels[b], labels[c]) != 0 || a == c) continue;
          if (parent[i][b * m + c] < 0) parent[i][b * m + c] = a;
        }
      }
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      if (parent[n - 1][a * m + b] < 0) continue;
      if (shared(labels[b], labels[first]) != 0 || a == first || b == second) continue;
      std::vector<Label> seq(n);
      int prev = a, cur = b;
      for (int i = n - 1; i >= 1; --i) {
        seq[i] = labels[cur];
        int p = parent[i][prev * m + cur];
        cur = prev;
        prev = p;
      }
      seq[0] = labels[first];
      return from_sequence(seq, 2, k);
    }
  return std::nullopt;
}

Labeling color_cycle(int n, CycleScheme scheme) {
  if (n < 3) fail(ErrorKind::invalid_input, "cycle-length", "cycles need n >= 3");
  const bool short_cycle = n == 3 || n == 4 || n == 7;
  switch (scheme) {
    case CycleScheme::tone: {
      auto f = color_cycle_2tone(n, short_cycle ? 6 : 5);
      if (!f) fail(ErrorKind::internal, "cycle-coloring", "no 2-tone coloring of C" + std::to_string(n));
      check(*f, Mode::tone, "tone");
      return *f;
    }
    case CycleScheme::good6: {
      Labeling f;
      if (n == 3) {
        f = from_sequence({{1, 2}, {3, 4}, {5, 6}}, 2, 6);
      } else if (n == 4) {
        f = from_sequence({{1, 2}, {3, 4}, {1, 5}, {3, 6}}, 2, 6);
      } else if (n == 7) {
        f = from_sequence({{1, 2}, {3, 4}, {1, 5}, {2, 4}, {1, 3}, {2, 5}, {3, 6}}, 2, 6);
      } else {
        // Every 2-tone 5-coloring is already good.
        f = color_cycle(n, CycleScheme::tone);
        f.set_palette(6);
      }
      check(f, Mode::good, "good6");
      return f;
    }
    case CycleScheme::threegood11: {
      std::vector<Label> seq;
      if (n == 3) {
        seq = {{1, 2, 3}, {4, 5, 6}, {7, 8, 9}};
      } else {
        seq = {{1, 2, 3}, {4, 5, 6}, {1, 7, 8}, {4, 9, 10}};
        while (static_cast<int>(seq.size()) < n) grow_three_good(seq);
      }
      Labeling f = from_sequence(seq, 3, 11);
      check(f, Mode::three_good, "threegood11");
      return f;
    }
  }
  fail(ErrorKind::invalid_input, "scheme", "unknown cycle scheme");
}

}  // namespace ttone
