#pragma once

namespace ttone {

// ceil((5 + sqrt(8Δ + 1)) / 2): 2-tone chromatic number of a tree with maximum degree Δ >= 1.
int tree_tau_formula(int max_degree);

// max{10, ceil((13 + sqrt(8Δ - 15)) / 2)} for Halin graphs, Δ >= 3.
int halin_bound(int max_degree);

// Tabulated 2-tone chromatic number of the cycle C_n (n >= 3).
int cycle_tau_formula(int n);

// Tabulated 2-tone chromatic number of the wheel with a rim of d >= 3 vertices.
int wheel_tau_formula(int d);

}  // namespace ttone
