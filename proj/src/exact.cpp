#include "m2o/exact.hpp"

#include <limits>
#include <stdexcept>

#include "m2o/hungarian.hpp"

namespace m2o {

SolveResult brute_force(const BipartiteInstance& inst, int max_n, int max_m) {
    const int n = inst.n, m = inst.m;
    if (n > max_n || m > max_m) throw std::invalid_argument("brute_force: instance above cap");

    std::vector<int> assign(n, 0), best;
    std::vector<int> degree(m, 0);
    degree[0] = n;
    double best_cost = std::numeric_limits<double>::infinity();

    // Odometer enumeration in lexicographic order; strict improvement keeps
    // the lexicographically smallest assignment among ties.
    for (;;) {
        int covered = 0;
        for (int d : degree) covered += (d > 0);
        if (covered == m) {
            double cost = 0.0;
            for (int a = 0; a < n; ++a) cost += inst.w(a, assign[a]);
            if (cost < best_cost) {
                best_cost = cost;
                best = assign;
            }
        }
        int pos = n - 1;
        while (pos >= 0 && assign[pos] == m - 1) {
            --degree[m - 1];
            assign[pos] = 0;
            ++degree[0];
            --pos;
        }
        if (pos < 0) break;
        --degree[assign[pos]];
        ++assign[pos];
        ++degree[assign[pos]];
    }

    SolveResult res;
    res.matching = make_matching(std::move(best), m);
    res.cost = best_cost;
    return res;
}

SolveResult reduction_solve(const BipartiteInstance& inst) {
    const int n = inst.n, m = inst.m;
    if (m > n) throw std::invalid_argument("reduction_solve: m > n");

    std::vector<int> row_argmin(n, 0);
    std::vector<double> row_min(n);
    for (int a = 0; a < n; ++a) {
        int arg = 0;
        double mn = inst.w(a, 0);
        for (int b = 1; b < m; ++b) {
            if (inst.w(a, b) < mn) {
                mn = inst.w(a, b);
                arg = b;
            }
        }
        row_argmin[a] = arg;
        row_min[a] = mn;
    }

    std::vector<double> cost(static_cast<size_t>(n) * n);
    for (int a = 0; a < n; ++a) {
        for (int j = 0; j < n; ++j)
            cost[static_cast<size_t>(a) * n + j] = (j < m) ? inst.w(a, j) : row_min[a];
    }

    std::vector<int> rowsol;
    assignment_solve(cost, n, rowsol);

    std::vector<int> assign(n);
    for (int a = 0; a < n; ++a) assign[a] = (rowsol[a] < m) ? rowsol[a] : row_argmin[a];

    SolveResult res;
    res.matching = make_matching(std::move(assign), m);
    res.cost = matching_cost(inst, res.matching);
    return res;
}

}  // namespace m2o
