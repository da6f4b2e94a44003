#pragma once

#include <optional>
#include <vector>

#include "ttone/graph.hpp"

namespace ttone {

struct ForbiddenReport {
  bool has_c3 = false;
  bool has_c4 = false;
  bool has_c7 = false;
  bool has_k4e = false;
  bool connected = true;
  int max_degree = 0;
  int min_degree = 0;
};

ForbiddenReport detect_forbidden(const Graph& g);

// Some cycle of exactly `length` vertices (3 <= length <= 7), in walk order.
std::optional<std::vector<Vertex>> find_cycle(const Graph& g, int length);

// Four vertices {a, b, c, d} where edge bc lies in triangles abc and bcd.
std::optional<std::vector<Vertex>> find_k4e(const Graph& g);

}  // namespace ttone
