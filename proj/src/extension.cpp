#include "ttone/extension.hpp"

#include <algorithm>
#include <unordered_set>

#include "ttone/errors.hpp"

namespace ttone {

namespace {

struct KeyHash {
  std::size_t operator()(const std::vector<std::uint64_t>& key) const noexcept {
    std::size_t h = 1469598103934665603ULL;
    for (auto x : key) h = (h ^ x) * 1099511628211ULL + (h >> 29);
    return h;
  }
};

// Backtracking over an ordered scope. Labels of scope vertices more than
// `window` positions back cannot constrain the suffix, so failed suffix
// states are memoized on (position, last `window` labels).
class ScopeSearch {
 public:
  ScopeSearch(const DistanceTable& dist, Labeling& f, std::vector<Vertex> scope, Mode mode,
              const std::vector<Label>& labels, std::uint64_t limit)
      : dist_(dist), f_(f), scope_(std::move(scope)), mode_(mode), labels_(labels), limit_(limit) {
    std::vector<int> pos(dist.order(), -1);
    for (std::size_t i = 0; i < scope_.size(); ++i) pos[scope_[i]] = static_cast<int>(i);
    for (std::size_t i = 0; i < scope_.size(); ++i)
      for (const auto& [u, d] : dist.ball(scope_[i]))
        if (pos[u] >= 0 && pos[u] < static_cast<int>(i)) window_ = std::max(window_, static_cast<int>(i) - pos[u]);
  }

  bool run(std::span<const Label> previous) {
    previous_.assign(previous.begin(), previous.end());
    return place(0);
  }

  std::uint64_t nodes() const { return nodes_; }
  bool exhausted() const { return nodes_ > limit_; }

 private:
  bool place(std::size_t i) {
    if (i == scope_.size()) return true;
    if (nodes_ > limit_) return false;
    std::vector<std::uint64_t> key;
    key.push_back(i);
    for (std::size_t j = i >= static_cast<std::size_t>(window_) ? i - window_ : 0; j < i; ++j)
      key.push_back(f_[scope_[j]].bits());
    if (failed_.count(key)) return false;
    Vertex v = scope_[i];
    auto attempt = [&](Label l) {
      if (!fits(dist_, f_, v, l, mode_)) return false;
      ++nodes_;
      f_.set(v, l);
      if (place(i + 1)) return true;
      f_.clear(v);
      return false;
    };
    // Prefer a retained vertex's previous label.
    if (!previous_[i].empty() && attempt(previous_[i])) return true;
    for (Label l : labels_) {
      if (l == previous_[i]) continue;
      if (attempt(l)) return true;
      if (nodes_ > limit_) return false;
    }
    failed_.insert(std::move(key));
    return false;
  }

  const DistanceTable& dist_;
  Labeling& f_;
  std::vector<Vertex> scope_;
  Mode mode_;
  const std::vector<Label>& labels_;
  std::uint64_t limit_;
  std::uint64_t nodes_ = 0;
  int window_ = 0;
  std::vector<Label> previous_;
  std::unordered_set<std::vector<std::uint64_t>, KeyHash> failed_;
};

// Scope order: breadth-first layers outward from the retained vertices,
// so constrained pairs sit close together.
std::vector<Vertex> layered_order(const Graph& g, const Labeling& f, std::span<const Vertex> relabel,
                                  std::span<const Vertex> removed) {
  std::vector<char> in_removed(g.order(), 0);
  for (Vertex v : removed) in_removed[v] = 1;
  std::vector<int> depth(g.order(), -1);
  std::vector<Vertex> queue;
  for (Vertex v = 0; v < g.order(); ++v)
    if (f.labeled(v) && !in_removed[v]) {
      depth[v] = 0;
      queue.push_back(v);
    }
  for (std::size_t head = 0; head < queue.size(); ++head)
    for (Vertex w : g.neighbors(queue[head]))
      if (depth[w] < 0) {
        depth[w] = depth[queue[head]] + 1;
        queue.push_back(w);
      }
  std::vector<Vertex> rest(removed.begin(), removed.end());
  std::stable_sort(rest.begin(), rest.end(), [&](Vertex a, Vertex b) {
    int da = depth[a] < 0 ? 1 << 20 : depth[a];
    int db = depth[b] < 0 ? 1 << 20 : depth[b];
    return da < db;
  });
  std::vector<Vertex> order(relabel.begin(), relabel.end());
  order.insert(order.end(), rest.begin(), rest.end());
  return order;
}

}  // namespace

Label first_fitting(const DistanceTable& dist, const Labeling& f, Vertex v, std::span<const Label> candidates, Mode mode) {
  for (Label l : candidates)
    if (fits(dist, f, v, l, mode)) return l;
  return Label{};
}

bool extend_labeling(const Graph& g, const DistanceTable& dist, Labeling& f, std::span<const Vertex> removed,
                     Mode mode, ExtensionStats* stats, std::uint64_t node_limit) {
  const std::vector<Label> labels = all_labels(f.t(), f.k());
  std::vector<char> in_removed(g.order(), 0);
  for (Vertex v : removed) in_removed[v] = 1;

  auto violated = partial_violations(dist, f, mode);
  std::vector<Vertex> near;
  for (Vertex r : removed)
    for (const auto& [u, d] : dist.ball(r))
      if (d <= 2 && f.labeled(u) && !in_removed[u]) near.push_back(u);
  for (const auto& viol : violated) {
    near.push_back(viol.u);
    near.push_back(viol.v);
  }
  std::sort(near.begin(), near.end());
  near.erase(std::unique(near.begin(), near.end()), near.end());

  std::uint64_t spent = 0;
  const int m = static_cast<int>(near.size());
  std::vector<int> pick;
  for (int size = 0; size <= m; ++size) {
    // Enumerate size-subsets of `near` in lexicographic order.
    pick.resize(size);
    for (int i = 0; i < size; ++i) pick[i] = i;
    while (true) {
      std::vector<Vertex> relabel;
      for (int i : pick) relabel.push_back(near[i]);
      bool covers = std::all_of(violated.begin(), violated.end(), [&](const Violation& viol) {
        return std::binary_search(relabel.begin(), relabel.end(), viol.u) ||
               std::binary_search(relabel.begin(), relabel.end(), viol.v);
      });
      if (covers) {
        std::vector<Vertex> scope = layered_order(g, f, relabel, removed);
        std::vector<Label> previous;
        for (Vertex v : scope) previous.push_back(f[v]);
        for (Vertex v : relabel) f.clear(v);
        ScopeSearch search(dist, f, scope, mode, labels, node_limit - spent);
        bool ok = search.run(previous);
        spent += search.nodes();
        if (ok) {
          if (stats) {
            stats->nodes += spent;
            for (std::size_t i = 0; i < relabel.size(); ++i)
              if (f[relabel[i]] != previous[i]) ++stats->relabeled;
          }
          return true;
        }
        for (std::size_t i = 0; i < scope.size(); ++i) {
          if (in_removed[scope[i]])
            f.clear(scope[i]);
          else
            f.set(scope[i], previous[i]);
        }
        if (spent >= node_limit) return false;
      }
      int i = size - 1;
      while (i >= 0 && pick[i] == m - size + i) --i;
      if (i < 0) break;
      ++pick[i];
      for (int j = i + 1; j < size; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  if (stats) stats->nodes += spent;
  return false;
}

}  // namespace ttone
