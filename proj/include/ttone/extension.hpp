#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "ttone/graph.hpp"
#include "ttone/labeling.hpp"
#include "ttone/verify.hpp"

namespace ttone {

struct ExtensionStats {
  int relabeled = 0;          // retained vertices whose label changed
  std::uint64_t nodes = 0;
};

// Completes `f` on `removed` (currently unlabeled) under `mode` with palette
// f.k(). Retained vertices within distance two of the removed ones may be
// relabeled; subsets of them are tried smallest first, and any subset must
// cover every pair already violated among labeled vertices. `dist` must have
// cap >= constraint_radius(mode, f.t()) and belong to the graph being colored.
// Returns false when no completion exists within the node limit.
bool extend_labeling(const Graph& g, const DistanceTable& dist, Labeling& f, std::span<const Vertex> removed,
                     Mode mode, ExtensionStats* stats = nullptr, std::uint64_t node_limit = 20'000'000);

// Lowest label (lexicographic among `candidates`) that fits at v, or an empty label.
Label first_fitting(const DistanceTable& dist, const Labeling& f, Vertex v, std::span<const Label> candidates, Mode mode);

}  // namespace ttone
