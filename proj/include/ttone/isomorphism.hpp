#pragma once

#include <cstdint>

#include "ttone/graph.hpp"

namespace ttone {

// Isomorphism-invariant hash from a few rounds of color refinement.
std::uint64_t wl_hash(const Graph& g, int rounds = 3);

// Exact test by backtracking over refinement classes.
bool are_isomorphic(const Graph& a, const Graph& b);

}  // namespace ttone
