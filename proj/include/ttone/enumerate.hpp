#pragma once

#include <vector>

#include "ttone/halin.hpp"
#include "ttone/outerplane.hpp"

namespace ttone {

// One representative per isomorphism class of connected subcubic outerplanar
// graphs on n vertices (n >= 1), each with an outer order.
std::vector<OuterplaneEmbedding> enumerate_subcubic_outerplanar(int n);

// One representative per isomorphism class of cubic Halin graphs with
// 4 <= order <= max_n, ordered by order. Every expansion sequence is
// followed, so the cost grows like (max_n / 2)!; max_n <= 18.
std::vector<HalinStructure> enumerate_cubic_halin(int max_n);

}  // namespace ttone
