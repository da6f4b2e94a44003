#include "ttone/bounds.hpp"

#include <string>

#include "ttone/errors.hpp"

namespace ttone {

int tree_tau_formula(int max_degree) {
  if (max_degree < 1) fail(ErrorKind::invalid_input, "max-degree", "tree formula needs Δ >= 1");
  // Larger root of k^2 - 5k + 6 - 2Δ = 0, rounded up: the least k >= 3 with (k-2)(k-3) >= 2Δ.
  long long k = 3;
  while ((k - 2) * (k - 3) < 2LL * max_degree) ++k;
  return static_cast<int>(k);
}

int halin_bound(int max_degree) {
  if (max_degree < 3) fail(ErrorKind::invalid_input, "max-degree", "Halin graphs have Δ >= 3, got " + std::to_string(max_degree));
  // ceil((13 + s) / 2) with s = sqrt(8Δ - 15): least k with 2k - 13 >= 0 and (2k - 13)^2 >= 8Δ - 15.
  long long k = 7;
  while ((2 * k - 13) * (2 * k - 13) < 8LL * max_degree - 15) ++k;
  return static_cast<int>(k < 10 ? 10 : k);
}

int cycle_tau_formula(int n) {
  if (n < 3) fail(ErrorKind::invalid_input, "cycle-length", "cycles need n >= 3");
  return (n == 3 || n == 4 || n == 7) ? 6 : 5;
}

int wheel_tau_formula(int d) {
  if (d < 3) fail(ErrorKind::invalid_input, "wheel-size", "wheels need d >= 3");
  if (d == 5 || d == 6 || d == 8 || d == 9) return 7;
  if (d <= 15) return 8;
  return tree_tau_formula(d);
}

}  // namespace ttone
