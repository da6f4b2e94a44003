#pragma once

#include <cstdint>
#include <optional>

#include "ttone/graph.hpp"
#include "ttone/labeling.hpp"

namespace ttone {

// Deterministic work limit: the number of label placements the search may make.
struct SearchBudget {
  std::uint64_t max_nodes = 200'000'000;
};

enum class SolveStatus { sat, unsat, timeout };

struct SolveOutcome {
  SolveStatus status = SolveStatus::timeout;
  std::optional<Labeling> witness;  // present iff sat; always verifies in tone mode
  std::uint64_t nodes = 0;
};

// Backtracking decision procedure for t-tone k-colorability.
// Throws invalid_input unless 1 <= t <= k <= kMaxColors.
SolveOutcome decide_colorable(const Graph& g, int t, int k, SearchBudget budget = {});

struct TauResult {
  int k = 0;
  Labeling witness;
  std::uint64_t nodes = 0;
};

// Smallest k with a t-tone k-coloring. The budget is shared across all k
// tried; throws budget_exhausted when it runs out.
TauResult exact_tau(const Graph& g, int t, SearchBudget budget = {});

}  // namespace ttone
