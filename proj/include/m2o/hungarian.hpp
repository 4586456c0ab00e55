#pragma once

#include <vector>

namespace m2o {

// Dense linear assignment: minimize sum_i cost[i*n + rowsol[i]] over
// permutations. Shortest augmenting path with dual potentials, O(n^3).
// Returns the optimal cost; rowsol[i] is the column matched to row i.
double assignment_solve(const std::vector<double>& cost, int n, std::vector<int>& rowsol);

}  // namespace m2o
