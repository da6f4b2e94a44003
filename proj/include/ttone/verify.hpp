#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "ttone/graph.hpp"
#include "ttone/labeling.hpp"

namespace ttone {

enum class Mode {
  tone,        // |f(u) ∩ f(v)| < d(u,v) for all pairs
  good,        // 2-tone, and distance-2 pairs share exactly one color
  three_good,  // t = 3, adjacent labels disjoint, distance-2 labels share exactly one color
};

enum class Rule { tone, good_exact_one, three_good_adjacent_disjoint, three_good_exact_one };

std::string_view to_string(Mode m);
std::string_view to_string(Rule r);
Mode parse_mode(std::string_view text);

struct Violation {
  Vertex u;
  Vertex v;
  int distance;
  int shared;
  Rule rule;

  friend bool operator==(const Violation&, const Violation&) = default;
};

struct VerificationReport {
  bool valid = true;
  std::vector<Violation> violations;
};

// Largest distance at which `mode` constrains a pair of labels of size t.
int constraint_radius(Mode mode, int t);

// Whether two labels at distance d sharing `common` colors are compatible.
constexpr bool compatible(Mode mode, int d, int common) {
  switch (mode) {
    case Mode::tone:
      return common < d;
    case Mode::good:
      if (d == 1) return common == 0;
      if (d == 2) return common == 1;
      return common < d;
    case Mode::three_good:
      if (d == 1) return common == 0;
      if (d == 2) return common == 1;
      return true;
  }
  return false;
}

// Checks a total labeling; reports every violating pair (u < v) once.
// Throws invalid_input on unlabeled vertices, wrong label sizes, colors
// outside 1..k, or a mode/t mismatch.
VerificationReport verify(const Graph& g, const Labeling& f, Mode mode);

// Violations among the labeled vertices of a partial labeling, using a
// precomputed table whose cap covers constraint_radius(mode, f.t()).
std::vector<Violation> partial_violations(const DistanceTable& dist, const Labeling& f, Mode mode);

// True when `label` on v is compatible with every labeled vertex within the table's cap.
bool fits(const DistanceTable& dist, const Labeling& f, Vertex v, Label label, Mode mode);

}  // namespace ttone
