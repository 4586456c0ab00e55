#include "m2o/hungarian.hpp"

#include <limits>
#include <stdexcept>

namespace m2o {

double assignment_solve(const std::vector<double>& cost, int n, std::vector<int>& rowsol) {
    if (n < 1 || cost.size() != static_cast<size_t>(n) * n)
        throw std::invalid_argument("assignment_solve: bad matrix");
    const double inf = std::numeric_limits<double>::infinity();

    // 1-based internals; p[j] = row matched to column j, column 0 is virtual.
    std::vector<double> u(n + 1, 0.0), v(n + 1, 0.0), minv(n + 1);
    std::vector<int> p(n + 1, 0), way(n + 1, 0);
    std::vector<char> used(n + 1);

    for (int i = 1; i <= n; ++i) {
        p[0] = i;
        int j0 = 0;
        minv.assign(n + 1, inf);
        used.assign(n + 1, 0);
        do {
            used[j0] = 1;
            int i0 = p[j0], j1 = 0;
            double delta = inf;
            const double* row = cost.data() + static_cast<size_t>(i0 - 1) * n;
            for (int j = 1; j <= n; ++j) {
                if (used[j]) continue;
                double cur = row[j - 1] - u[i0] - v[j];
                if (cur < minv[j]) {
                    minv[j] = cur;
                    way[j] = j0;
                }
                if (minv[j] < delta) {
                    delta = minv[j];
                    j1 = j;
                }
            }
            for (int j = 0; j <= n; ++j) {
                if (used[j]) {
                    u[p[j]] += delta;
                    v[j] -= delta;
                } else {
                    minv[j] -= delta;
                }
            }
            j0 = j1;
        } while (p[j0] != 0);
        do {
            int j1 = way[j0];
            p[j0] = p[j1];
            j0 = j1;
        } while (j0);
    }

    rowsol.assign(n, -1);
    double total = 0.0;
    for (int j = 1; j <= n; ++j) {
        if (p[j]) {
            rowsol[p[j] - 1] = j - 1;
            total += cost[static_cast<size_t>(p[j] - 1) * n + (j - 1)];
        }
    }
    return total;
}

}  // namespace m2o
