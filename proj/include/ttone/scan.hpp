#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ttone/exact.hpp"
#include "ttone/graph.hpp"

namespace ttone {

enum class Conjecture {
  halin6,     // cubic Halin graphs with n >= 6 are 2-tone 6-colorable
  tone_step,  // tau_t <= tau_{t-1} + t + 1 for t >= 3
};

std::string to_string(Conjecture c);
Conjecture parse_conjecture(const std::string& text);

struct ScanParams {
  int max_n = 10;
  int sample_count = 0;  // seeded random instances on top of the enumerated ones
  std::uint64_t seed = 0;
  int t_max = 3;         // tone_step only
  SearchBudget budget{50'000'000};  // per instance and t
  int jobs = 1;
};

struct ScanRow {
  int id = 0;
  std::string source;     // "enumerated" or "random"
  Graph graph;
  std::vector<int> tau;   // tau[i] = tau_{i+1} (tone_step) or {tau_2} (halin6); -1 when the budget ran out
  bool exhausted = false;
  bool flagged = false;   // halin6: needs 7 colors; tone_step: the inequality fails
};

struct ScanReport {
  Conjecture which = Conjecture::halin6;
  std::vector<ScanRow> rows;  // ascending id
  int flagged = 0;
  int exhausted = 0;
};

// Never asserts the conjecture. halin6: every cubic Halin graph with
// 6 <= n <= min(max_n, 12) plus sample_count random ones with
// 12 < n <= max_n (max_n <= 14). tone_step: every connected subcubic
// outerplanar graph with 3 <= n <= min(max_n, 6) plus sample_count random
// ones with 3 <= n <= max_n (max_n <= 9, t_max = 3).
ScanReport scan_conjecture(Conjecture which, const ScanParams& params);

// CSV with header; one row per instance, graph as space-separated u-v pairs.
std::string format_scan_csv(const ScanReport& report);

}  // namespace ttone
