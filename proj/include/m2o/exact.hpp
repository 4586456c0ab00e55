#pragma once

#include <utility>

#include "m2o/instance.hpp"

namespace m2o {

struct SolveResult {
    ManyToOneMatching matching;
    double cost = 0.0;
};

// Exhaustive search over all onto maps A -> B. Requires n <= max_n and
// m <= max_m (m^n enumeration); among cost ties returns the
// lexicographically smallest assign array.
SolveResult brute_force(const BipartiteInstance& inst, int max_n = 9, int max_m = 5);

// Optimal solver via reduction to the linear assignment problem: columns
// 0..m-1 keep their weights, the n-m surplus columns cost each row its
// cheapest B partner. Rows landing on a surplus column are matched to that
// per-row argmin. O(n^3).
SolveResult reduction_solve(const BipartiteInstance& inst);

}  // namespace m2o
