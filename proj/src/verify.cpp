#include "ttone/verify.hpp"

#include <string>

#include "ttone/errors.hpp"

namespace ttone {

std::string_view to_string(Mode m) {
  switch (m) {
    case Mode::tone: return "tone";
    case Mode::good: return "good";
    case Mode::three_good: return "3good";
  }
  return "?";
}

std::string_view to_string(Rule r) {
  switch (r) {
    case Rule::tone: return "t-tone";
    case Rule::good_exact_one: return "good-exact-one";
    case Rule::three_good_adjacent_disjoint: return "3good-adjacent-disjoint";
    case Rule::three_good_exact_one: return "3good-exact-one";
  }
  return "?";
}

Mode parse_mode(std::string_view text) {
  if (text == "tone" || text == "t-tone") return Mode::tone;
  if (text == "good" || text == "good-2-tone") return Mode::good;
  if (text == "3good" || text == "3-good" || text == "three-good") return Mode::three_good;
  fail(ErrorKind::invalid_input, "mode", "unknown verification mode '" + std::string(text) + "'");
}

int constraint_radius(Mode mode, int t) {
  switch (mode) {
    case Mode::tone: return t;
    case Mode::good: return 2;
    case Mode::three_good: return 2;
  }
  return t;
}

namespace {

void check_mode(Mode mode, int t) {
  if (t < 1) fail(ErrorKind::invalid_input, "label-size", "t must be positive");
  if (mode == Mode::good && t != 2)
    fail(ErrorKind::invalid_input, "mode-t-mismatch", "good mode requires t = 2");
  if (mode == Mode::three_good && t != 3)
    fail(ErrorKind::invalid_input, "mode-t-mismatch", "3-good mode requires t = 3");
}

void append_violations(std::vector<Violation>& out, Vertex u, Vertex v, int d, int common, Mode mode) {
  if (mode == Mode::tone) {
    if (common >= d) out.push_back({u, v, d, common, Rule::tone});
    return;
  }
  if (mode == Mode::good) {
    if (d == 2) {
      if (common != 1) out.push_back({u, v, d, common, Rule::good_exact_one});
    } else if (common >= d) {
      out.push_back({u, v, d, common, Rule::tone});
    }
    return;
  }
  if (d == 1 && common != 0) out.push_back({u, v, d, common, Rule::three_good_adjacent_disjoint});
  if (d == 2 && common != 1) out.push_back({u, v, d, common, Rule::three_good_exact_one});
}

}  // namespace

VerificationReport verify(const Graph& g, const Labeling& f, Mode mode) {
  check_mode(mode, f.t());
  if (f.order() != g.order())
    fail(ErrorKind::invalid_input, "label-count", "labeling covers " + std::to_string(f.order()) +
                                                      " vertices, graph has " + std::to_string(g.order()));
  if (f.k() < f.t() || f.k() > kMaxColors)
    fail(ErrorKind::invalid_input, "palette", "palette size " + std::to_string(f.k()) + " invalid");
  for (Vertex v = 0; v < g.order(); ++v) {
    if (!f.labeled(v)) fail(ErrorKind::invalid_input, "unlabeled", "vertex " + std::to_string(v) + " has no label");
    if (f[v].size() != f.t())
      fail(ErrorKind::invalid_input, "label-size",
           "vertex " + std::to_string(v) + " has " + std::to_string(f[v].size()) + " colors, expected " +
               std::to_string(f.t()));
    if (f[v].max_color() > f.k())
      fail(ErrorKind::invalid_input, "color-range",
           "vertex " + std::to_string(v) + " uses a color above k = " + std::to_string(f.k()));
  }
  DistanceTable dist(g, constraint_radius(mode, f.t()));
  VerificationReport report;
  report.violations = partial_violations(dist, f, mode);
  report.valid = report.violations.empty();
  return report;
}

std::vector<Violation> partial_violations(const DistanceTable& dist, const Labeling& f, Mode mode) {
  std::vector<Violation> out;
  for (Vertex u = 0; u < dist.order(); ++u) {
    if (!f.labeled(u)) continue;
    for (const auto& [v, d] : dist.ball(u)) {
      if (v <= u || !f.labeled(v)) continue;
      append_violations(out, u, v, d, shared(f[u], f[v]), mode);
    }
  }
  return out;
}

bool fits(const DistanceTable& dist, const Labeling& f, Vertex v, Label label, Mode mode) {
  for (const auto& [u, d] : dist.ball(v))
    if (f.labeled(u) && !compatible(mode, d, shared(label, f[u]))) return false;
  return true;
}

}  // namespace ttone
