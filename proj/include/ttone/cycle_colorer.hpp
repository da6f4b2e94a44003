#pragma once

#include <optional>

#include "ttone/labeling.hpp"

namespace ttone {

enum class CycleScheme {
  tone,          // 2-tone with 5 colors, or 6 when n ∈ {3, 4, 7}
  good6,         // good 2-tone with palette 6
  threegood11,   // 3-good with palette 11
};

// Labels the cycle 0-1-...-(n-1)-0; vertex i receives entry i.
// Throws invalid_input for n < 3.
Labeling color_cycle(int n, CycleScheme scheme);

// 2-tone coloring of C_n with palette k by a transfer-matrix pass over
// consecutive label pairs; empty optional when none exists.
std::optional<Labeling> color_cycle_2tone(int n, int k);

}  // namespace ttone
