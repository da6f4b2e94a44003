#include "ttone/exact.hpp"

#include <algorithm>
#include <string>

#include "ttone/errors.hpp"
#include "ttone/verify.hpp"

namespace ttone {

namespace {

// Breadth-first from a maximum-degree vertex, neighbors by id; each new
// component restarts at its maximum-degree vertex.
std::vector<Vertex> search_order(const Graph& g) {
  const int n = g.order();
  std::vector<char> seen(n, 0);
  std::vector<Vertex> order;
  while (static_cast<int>(order.size()) < n) {
    Vertex start = -1;
    for (Vertex v = 0; v < n; ++v)
      if (!seen[v] && (start < 0 || g.degree(v) > g.degree(start))) start = v;
    std::size_t head = order.size();
    order.push_back(start);
    seen[start] = 1;
    for (; head < order.size(); ++head)
      for (Vertex w : g.neighbors(order[head]))
        if (!seen[w]) {
          seen[w] = 1;
          order.push_back(w);
        }
  }
  return order;
}

class Search {
 public:
  Search(const Graph& g, int t, int k, std::uint64_t max_nodes)
      : t_(t), k_(k), max_nodes_(max_nodes), order_(search_order(g)), labels_(all_labels(t, k)) {
    const int n = g.order();
    DistanceTable dist(g, t);
    std::vector<int> pos(n);
    for (int i = 0; i < n; ++i) pos[order_[i]] = i;
    earlier_.resize(n);
    for (int i = 0; i < n; ++i)
      for (const auto& [u, d] : dist.ball(order_[i]))
        if (pos[u] < i) earlier_[i].push_back({pos[u], d});
    assigned_.assign(n, Label{});
  }

  SolveStatus run() {
    if (order_.empty()) return SolveStatus::sat;
    return place(0, 0);
  }

  std::uint64_t nodes() const { return nodes_; }

  Labeling witness(int n) const {
    Labeling f(n, t_, k_);
    for (std::size_t i = 0; i < order_.size(); ++i) f.set(order_[i], assigned_[i]);
    return f;
  }

 private:
  struct Prior {
    int position;
    int distance;
  };

  SolveStatus place(int i, int max_used) {
    if (i == static_cast<int>(order_.size())) return SolveStatus::sat;
    for (Label l : labels_) {
      // Colors above max_used must be introduced in increasing order.
      int fresh = (l - Label::from_bits(max_used == 0 ? 0 : (~std::uint64_t{0} >> (64 - max_used)))).size();
      if (l.max_color() > max_used + fresh) continue;
      bool ok = true;
      for (const auto& p : earlier_[i])
        if (shared(l, assigned_[p.position]) >= p.distance) {
          ok = false;
          break;
        }
      if (!ok) continue;
      if (nodes_ == max_nodes_) return SolveStatus::timeout;
      ++nodes_;
      assigned_[i] = l;
      SolveStatus s = place(i + 1, std::max(max_used, l.max_color()));
      if (s != SolveStatus::unsat) return s;
    }
    assigned_[i] = Label{};
    return SolveStatus::unsat;
  }

  int t_;
  int k_;
  std::uint64_t max_nodes_;
  std::uint64_t nodes_ = 0;
  std::vector<Vertex> order_;
  std::vector<Label> labels_;
  std::vector<std::vector<Prior>> earlier_;
  std::vector<Label> assigned_;
};

}  // namespace

SolveOutcome decide_colorable(const Graph& g, int t, int k, SearchBudget budget) {
  if (t < 1 || k < t || k > kMaxColors)
    fail(ErrorKind::invalid_input, "palette", "need 1 <= t <= k <= " + std::to_string(kMaxColors));
  Search search(g, t, k, budget.max_nodes);
  SolveOutcome out;
  out.status = search.run();
  out.nodes = search.nodes();
  if (out.status == SolveStatus::sat) {
    out.witness = search.witness(g.order());
    if (!verify(g, *out.witness, Mode::tone).valid)
      fail(ErrorKind::internal, "unsound-witness", "solver produced an invalid coloring");
  }
  return out;
}

TauResult exact_tau(const Graph& g, int t, SearchBudget budget) {
  if (t < 1) fail(ErrorKind::invalid_input, "label-size", "t must be positive");
  std::uint64_t spent = 0;
  for (int k = t; k <= kMaxColors; ++k) {
    SolveOutcome o = decide_colorable(g, t, k, {budget.max_nodes - spent});
    spent += std::min(o.nodes, budget.max_nodes - spent);
    if (o.status == SolveStatus::timeout)
      fail(ErrorKind::budget_exhausted, "budget", "search budget exhausted at k = " + std::to_string(k));
    if (o.status == SolveStatus::sat) return {k, std::move(*o.witness), spent};
  }
  fail(ErrorKind::precondition, "palette", "no coloring within the maximum palette");
}

}  // namespace ttone
