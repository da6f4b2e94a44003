#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "ttone/graph.hpp"

namespace ttone {

// mt19937_64 with rejection-sampled bounded draws, so streams are fixed by the
// seed alone and do not depend on the standard library's distributions.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // Uniform in [0, bound); bound >= 1.
  std::uint64_t below(std::uint64_t bound);
  // Uniform in [lo, hi].
  int between(int lo, int hi) { return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo) + 1)); }

 private:
  std::mt19937_64 engine_;
};

struct GeneratorParams {
  int n = 0;
  int d = 0;                // wheel rim size; Halin maximum degree
  std::string faces = "any";  // outerplanar face lengths: "any" (3..9) or "long" (5, 6, 8, 9)
};

struct GraphBundle {
  Graph graph;
  std::optional<std::vector<Vertex>> outer_order;
  std::optional<std::vector<Edge>> tree_edges;
  std::optional<std::vector<Vertex>> leaf_order;
  std::string family;
  GeneratorParams params;
  std::optional<std::uint64_t> seed;
  std::vector<int> face_sizes;  // outerplanar: lengths of the faces created, in order
};

// Families: cycle (n >= 3), path (n >= 1), complete (n >= 1), k4e, wheel (d >= 3),
// fig1, outerplanar (n >= 3, seeded), halin (n, d >= 3, seeded), cubicHalin
// (even n >= 4, seeded). Throws invalid_input for unknown families, bad
// parameters and a missing seed.
GraphBundle generate(const std::string& family, const GeneratorParams& params,
                     std::optional<std::uint64_t> seed = std::nullopt);

bool family_is_randomized(const std::string& family);

}  // namespace ttone
