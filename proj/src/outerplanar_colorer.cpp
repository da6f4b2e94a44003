#include "ttone/outerplanar_colorer.hpp"

#include <algorithm>
#include <set>

#include "ttone/classify.hpp"
#include "ttone/cycle_colorer.hpp"
#include "ttone/errors.hpp"
#include "ttone/extension.hpp"
#include "ttone/forbidden.hpp"

namespace ttone {

std::string to_string(OuterplanarTarget t) {
  switch (t) {
    case OuterplanarTarget::automatic: return "auto";
    case OuterplanarTarget::tone5: return "tone5";
    case OuterplanarTarget::good6: return "good6";
    case OuterplanarTarget::threegood11: return "threegood11";
  }
  return "?";
}

OuterplanarTarget parse_outerplanar_target(const std::string& text) {
  if (text == "auto") return OuterplanarTarget::automatic;
  if (text == "tone5") return OuterplanarTarget::tone5;
  if (text == "good6") return OuterplanarTarget::good6;
  if (text == "threegood11") return OuterplanarTarget::threegood11;
  fail(ErrorKind::invalid_input, "unknown-target", "unknown outerplanar target: " + text);
}

std::string to_string(ReductionStep::Kind k) {
  switch (k) {
    case ReductionStep::Kind::base_vertex: return "base-vertex";
    case ReductionStep::Kind::base_cycle: return "base-cycle";
    case ReductionStep::Kind::base_exact: return "base-exact";
    case ReductionStep::Kind::remove_leaf: return "remove-leaf";
    case ReductionStep::Kind::pendant_delete: return "pendant-delete";
    case ReductionStep::Kind::pendant_contract: return "pendant-contract";
  }
  return "?";
}

Graph replay(const ReductionTrace& trace, int order) {
  std::set<Edge> edges;
  for (auto it = trace.steps.rbegin(); it != trace.steps.rend(); ++it) {
    for (const Edge& e : it->added_edges) edges.erase(e);
    edges.insert(it->restored_edges.begin(), it->restored_edges.end());
  }
  std::vector<Edge> list(edges.begin(), edges.end());
  return Graph(order, list);
}

namespace {

struct Level {
  Graph graph;
  std::vector<Vertex> order;  // outer order, local ids
  std::vector<Vertex> ids;    // local -> input id
};

class Reducer {
 public:
  Reducer(OuterplanarTarget target, ReductionTrace& trace) : target_(target), trace_(trace) {
    switch (target) {
      case OuterplanarTarget::tone5: t_ = 2, k_ = 5, mode_ = Mode::tone, scheme_ = CycleScheme::tone; break;
      case OuterplanarTarget::good6: t_ = 2, k_ = 6, mode_ = Mode::good, scheme_ = CycleScheme::good6; break;
      case OuterplanarTarget::threegood11:
        t_ = 3, k_ = 11, mode_ = Mode::three_good, scheme_ = CycleScheme::threegood11;
        break;
      case OuterplanarTarget::automatic: fail(ErrorKind::internal, "bad-target", "reducer needs a concrete target");
    }
  }

  Labeling color(const Level& lv) {
    const Graph& g = lv.graph;
    int n = g.order();
    Labeling f(n, t_, k_);
    if (n == 0) return f;

    if (!g.connected()) {
      for (const auto& comp : connected_components(g)) {
        Level sub = restrict(lv, comp, {});
        Labeling fs = color(sub);
        for (std::size_t i = 0; i < comp.size(); ++i) f.set(comp[i], fs[static_cast<Vertex>(i)]);
      }
      return f;
    }

    if (n == 1) {
      std::vector<Color> all(t_);
      for (int i = 0; i < t_; ++i) all[i] = i + 1;
      f.set(0, Label(all));
      ReductionStep step;
      step.kind = ReductionStep::Kind::base_vertex;
      step.removed = {lv.ids[0]};
      trace_.steps.push_back(step);
      return f;
    }

    for (Vertex v = 0; v < n; ++v)
      if (g.degree(v) <= 1) return reduce(lv, {v}, {}, ReductionStep::Kind::remove_leaf, 0);

    FaceSet faces = validate_outerplane(g, lv.order);
    if (faces.faces.size() == 1) {
      const auto& cyc = faces.faces[0];
      Labeling fc = color_cycle(static_cast<int>(cyc.size()), scheme_);
      for (std::size_t i = 0; i < cyc.size(); ++i) f.set(cyc[i], fc[static_cast<Vertex>(i)]);
      ReductionStep step;
      step.kind = ReductionStep::Kind::base_cycle;
      for (Vertex v : cyc) step.removed.push_back(lv.ids[v]);
      for (const Edge& e : g.edges()) step.restored_edges.push_back(make_edge(lv.ids[e.first], lv.ids[e.second]));
      std::sort(step.removed.begin(), step.removed.end());
      trace_.steps.push_back(step);
      return f;
    }

    WeakDual wd = weak_dual(faces, g);
    if (wd.pendant_faces.empty()) fail(ErrorKind::internal, "no-pendant-face", "face structure without a pendant face");
    std::vector<Vertex> face = oriented(faces.faces[wd.pendant_faces.front()], g);
    int len = static_cast<int>(face.size());
    auto v = [&](int i) { return face[i - 1]; };  // 1-based as v1..vl

    std::vector<Vertex> path;
    for (Vertex u : face)
      if (g.degree(u) == 2) path.push_back(u);

    bool contract = false;
    if (target_ == OuterplanarTarget::good6 && len >= 5) contract = true;
    if (target_ == OuterplanarTarget::threegood11 && len >= 4) contract = true;
    if (!contract) return reduce(lv, path, {}, ReductionStep::Kind::pendant_delete, len);
    if (target_ == OuterplanarTarget::threegood11 && len >= 5)
      return reduce(lv, {v(3)}, {make_edge(v(2), v(4))}, ReductionStep::Kind::pendant_contract, len);
    return reduce(lv, {v(2)}, {make_edge(v(1), v(3))}, ReductionStep::Kind::pendant_contract, len);
  }

 private:
  // Face cycle rotated so v1 has degree 3 and, when two consecutive
  // vertices have degree 3, v_l is the other one.
  static std::vector<Vertex> oriented(const std::vector<Vertex>& cyc, const Graph& g) {
    int len = static_cast<int>(cyc.size());
    int start = -1;
    for (int i = 0; i < len && start < 0; ++i)
      if (g.degree(cyc[i]) >= 3 && g.degree(cyc[(i + 1) % len]) == 2) start = i;
    if (start < 0) fail(ErrorKind::internal, "pendant-face-shape", "pendant face without a degree-3 vertex");
    std::vector<Vertex> out;
    for (int i = 0; i < len; ++i) out.push_back(cyc[(start + i) % len]);
    return out;
  }

  static Level restrict(const Level& lv, const std::vector<Vertex>& keep, const std::vector<Edge>& extra) {
    std::vector<int> local(lv.graph.order(), -1);
    for (std::size_t i = 0; i < keep.size(); ++i) local[keep[i]] = static_cast<int>(i);
    std::vector<Edge> edges;
    for (const Edge& e : lv.graph.edges())
      if (local[e.first] >= 0 && local[e.second] >= 0) edges.push_back(make_edge(local[e.first], local[e.second]));
    for (const Edge& e : extra) edges.push_back(make_edge(local[e.first], local[e.second]));
    Level out;
    out.graph = Graph(static_cast<int>(keep.size()), edges);
    for (Vertex u : lv.order)
      if (local[u] >= 0) out.order.push_back(local[u]);
    for (Vertex u : keep) out.ids.push_back(lv.ids[u]);
    return out;
  }

  Labeling reduce(const Level& lv, std::vector<Vertex> removed, const std::vector<Edge>& added,
                  ReductionStep::Kind kind, int face_length) {
    const Graph& g = lv.graph;
    std::vector<char> gone(g.order(), 0);
    for (Vertex u : removed) gone[u] = 1;
    std::vector<Vertex> keep;
    for (Vertex u = 0; u < g.order(); ++u)
      if (!gone[u]) keep.push_back(u);

    std::size_t slot = trace_.steps.size();
    ReductionStep step;
    step.kind = kind;
    step.face_length = face_length;
    for (Vertex u : removed) step.removed.push_back(lv.ids[u]);
    for (const Edge& e : g.edges())
      if (gone[e.first] || gone[e.second]) step.restored_edges.push_back(make_edge(lv.ids[e.first], lv.ids[e.second]));
    for (const Edge& e : added) step.added_edges.push_back(make_edge(lv.ids[e.first], lv.ids[e.second]));
    trace_.steps.push_back(step);

    Labeling sub = color(restrict(lv, keep, added));
    Labeling f(g.order(), t_, k_);
    for (std::size_t i = 0; i < keep.size(); ++i) f.set(keep[i], sub[static_cast<Vertex>(i)]);

    DistanceTable dist(g, constraint_radius(mode_, t_));
    ExtensionStats stats;
    if (!extend_labeling(g, dist, f, removed, mode_, &stats))
      fail(ErrorKind::internal, "extension-failed", "no completion found for a reduction step");
    trace_.steps[slot].relabeled = stats.relabeled;
    return f;
  }

  OuterplanarTarget target_;
  ReductionTrace& trace_;
  int t_ = 2;
  int k_ = 5;
  Mode mode_ = Mode::tone;
  CycleScheme scheme_ = CycleScheme::tone;
};

void require_subcubic(const Graph& g) {
  if (g.max_degree() > 3) fail(ErrorKind::precondition, "not-subcubic", "maximum degree exceeds three");
}

}  // namespace

OuterplanarColoring color_subcubic_outerplanar(const OuterplaneEmbedding& emb, OuterplanarTarget target,
                                               SearchBudget exact_budget) {
  const Graph& g = emb.graph;
  validate_outerplane(emb);
  require_subcubic(g);

  OuterplanarColoring out;
  if (target == OuterplanarTarget::automatic) {
    ClassificationResult cls = classify_subcubic_outerplanar(g, emb.outer_order);
    if (cls.tau_class == 5) {
      target = OuterplanarTarget::tone5;
    } else if (cls.tau_class == 6) {
      target = OuterplanarTarget::good6;
    } else {
      SolveOutcome res = decide_colorable(g, 2, 7, exact_budget);
      if (res.status == SolveStatus::timeout)
        fail(ErrorKind::budget_exhausted, "exact-budget", "7-colorability search ran out of nodes");
      if (res.status != SolveStatus::sat)
        fail(ErrorKind::internal, "class-seven-unsat", "graph classified as 7 has no 2-tone 7-coloring");
      out.k = 7;
      out.mode = Mode::tone;
      out.labeling = *res.witness;
      ReductionStep step;
      step.kind = ReductionStep::Kind::base_exact;
      for (Vertex v = 0; v < g.order(); ++v) step.removed.push_back(v);
      step.restored_edges = g.edges();
      out.trace.steps.push_back(step);
      if (!verify(g, out.labeling, out.mode).valid)
        fail(ErrorKind::internal, "invalid-output", "exact witness failed verification");
      return out;
    }
  }

  ForbiddenReport rep = detect_forbidden(g);
  if (target == OuterplanarTarget::tone5 && (rep.has_c3 || rep.has_c4 || rep.has_c7))
    fail(ErrorKind::precondition, "forbidden-cycle", "tone5 needs a graph without C3, C4 and C7");
  if (target == OuterplanarTarget::good6 && rep.has_k4e)
    fail(ErrorKind::precondition, "contains-k4e", "good6 needs a graph without K4 - e");

  Reducer reducer(target, out.trace);
  Level top;
  top.graph = g;
  top.order = emb.outer_order;
  for (Vertex v = 0; v < g.order(); ++v) top.ids.push_back(v);
  out.labeling = reducer.color(top);

  switch (target) {
    case OuterplanarTarget::tone5: out.k = 5, out.mode = Mode::tone; break;
    case OuterplanarTarget::good6: out.k = 6, out.mode = Mode::good; break;
    default: out.k = 11, out.mode = Mode::three_good; break;
  }
  out.labeling.set_palette(out.k);
  if (!verify(g, out.labeling, out.mode).valid)
    fail(ErrorKind::internal, "invalid-output", "constructed labeling failed verification");
  return out;
}

}  // namespace ttone
