#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ttone/forbidden.hpp"
#include "ttone/graph.hpp"

namespace ttone {

enum class WitnessKind { none, c3, c4, c7, k4e };

std::string to_string(WitnessKind w);

struct ClassificationResult {
  int tau_class = 0;             // 5, 6 or 7
  WitnessKind witness = WitnessKind::none;
  std::vector<Vertex> witness_vertices;  // the forbidden subgraph found, if any
  ForbiddenReport report;
};

// 2-tone chromatic number of a connected subcubic outerplanar graph with
// n >= 3, read off from its short cycles and K4 - e. Without an outer order,
// outerplanarity is checked by exhaustive search (n <= 10). Precondition
// codes: "disconnected", "not-subcubic", "too-small", "not-outerplanar",
// "embedding-required", "edge-crossing".
ClassificationResult classify_subcubic_outerplanar(const Graph& g,
                                                   const std::optional<std::vector<Vertex>>& outer_order = std::nullopt);

}  // namespace ttone
