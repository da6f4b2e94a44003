#pragma once

#include "ttone/halin.hpp"
#include "ttone/labeling.hpp"

namespace ttone {

struct HalinColoring {
  int k = 0;
  Labeling labeling;
  int final_case = 0;        // cubic colorer: 1 or 2, the case used for the last leaf
  bool search_fallback = false;  // cubic colorer: the last leaf needed a bounded search
  int reductions = 0;        // general colorer: number of fan reductions
};

// 2-tone coloring of a cubic Halin graph with at most 7 colors: the inner
// tree first, then one fan leaf, the remaining rim leaves with one color
// from {6,7} each, and the last leaf after normalizing colors.
// Throws precondition "not-cubic" and "too-small" (n < 6).
HalinColoring color_cubic_halin7(const HalinStructure& h);

// 2-tone coloring of any Halin graph with halin_bound(Δ) colors by fan
// reductions down to a wheel.
HalinColoring color_halin(const HalinStructure& h);

}  // namespace ttone
