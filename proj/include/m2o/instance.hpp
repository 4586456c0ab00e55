#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "m2o/rng.hpp"

namespace m2o {

// Complete bipartite instance K_{n,m} with m = ceil(n/alpha). The one side A
// has n vertices, the many side B has m, and weights is the dense n x m
// matrix of edge costs, row-major.
struct BipartiteInstance {
    int n = 0;
    int m = 0;
    double alpha = 0.0;
    uint64_t seed = 0;
    std::vector<double> weights;  // n*m, weights[a*m + b]

    double w(int a, int b) const { return weights[static_cast<size_t>(a) * m + b]; }
    double& w(int a, int b) { return weights[static_cast<size_t>(a) * m + b]; }
};

// Assignment A -> B plus the derived B-degree vector. Feasible (an actual
// many-to-one matching) iff every B vertex has degree >= 1.
struct ManyToOneMatching {
    std::vector<int> assign;   // size n, values in [0, m)
    std::vector<int> bdegree;  // size m
};

ManyToOneMatching make_matching(std::vector<int> assign, int m);

// Smallest integer m with m >= n/alpha, guarded against float boundary
// error: the float ceiling is adjusted until m-1 < n/alpha <= m holds.
int many_side_count(int n, double alpha);

// i.i.d. Exponential(mean = n) weights from a seeded stream. Deterministic
// per (n, alpha, seed). Rejects alpha <= 1.
BipartiteInstance gen_instance(int n, double alpha, uint64_t seed);

// Hook for non-default weight laws; only the exponential ships.
using WeightSampler = double (*)(RngStream&, int n);
BipartiteInstance gen_instance(int n, double alpha, uint64_t seed, WeightSampler sampler);

// Sum of the selected edge weights. Does not require feasibility.
double matching_cost(const BipartiteInstance& inst, const ManyToOneMatching& match);

bool is_feasible(const BipartiteInstance& inst, const ManyToOneMatching& match);

// Text format: header "n m alpha seed", then n rows of m weights, 17
// significant digits so a round trip is bit exact.
void dump_instance(const BipartiteInstance& inst, std::ostream& out);
BipartiteInstance load_instance(std::istream& in);
void save_instance_file(const BipartiteInstance& inst, const std::string& path);
BipartiteInstance load_instance_file(const std::string& path);

}  // namespace m2o
