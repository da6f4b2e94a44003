#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ttone/exact.hpp"
#include "ttone/graph.hpp"
#include "ttone/labeling.hpp"
#include "ttone/outerplane.hpp"
#include "ttone/verify.hpp"

namespace ttone {

enum class OuterplanarTarget { automatic, tone5, good6, threegood11 };

std::string to_string(OuterplanarTarget t);
OuterplanarTarget parse_outerplanar_target(const std::string& text);

struct ReductionStep {
  enum class Kind { base_vertex, base_cycle, base_exact, remove_leaf, pendant_delete, pendant_contract };
  Kind kind = Kind::base_vertex;
  std::vector<Vertex> removed;         // input-graph ids
  std::vector<Edge> restored_edges;    // edges at this level touching `removed` (or the whole base graph)
  std::vector<Edge> added_edges;       // edges introduced for the smaller graph
  int face_length = 0;                 // pendant face length, 0 otherwise
  int relabeled = 0;                   // retained vertices relabeled during extension
};

// Steps in the order they were taken (outermost first).
struct ReductionTrace {
  std::vector<ReductionStep> steps;
};

std::string to_string(ReductionStep::Kind k);

// Rebuilds the input graph from a trace by undoing the steps innermost first.
Graph replay(const ReductionTrace& trace, int order);

struct OuterplanarColoring {
  int k = 0;
  Mode mode = Mode::tone;   // the mode the labeling was checked against
  Labeling labeling;
  ReductionTrace trace;
};

// Colors a subcubic outerplane graph by repeatedly removing a leaf or
// reducing a pendant face, coloring the smaller graph and extending.
//   tone5       -> 2-tone, k = 5; requires no C3, C4, C7
//   good6       -> good 2-tone, k = 6; requires no K4 - e
//   threegood11 -> 3-good, k = 11
//   automatic   -> k = the classified 2-tone chromatic number (5, 6 or 7);
//                  requires a connected graph with n >= 3
// Throws precondition errors for violated requirements and internal
// "extension-failed" if a guaranteed extension is not found.
OuterplanarColoring color_subcubic_outerplanar(const OuterplaneEmbedding& emb, OuterplanarTarget target,
                                               SearchBudget exact_budget = {});

}  // namespace ttone
