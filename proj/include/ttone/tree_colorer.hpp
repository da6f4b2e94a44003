#pragma once

#include "ttone/graph.hpp"
#include "ttone/labeling.hpp"

namespace ttone {

struct TreeColoring {
  int k = 0;
  Labeling labeling;
};

// Greedy breadth-first 2-tone coloring from vertex 0 with the optimal
// palette ceil((5 + sqrt(8Δ + 1)) / 2). Throws precondition "not-a-tree"
// or "trivial-tree".
TreeColoring color_tree_2tone(const Graph& tree);

}  // namespace ttone
