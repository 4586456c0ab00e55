#pragma once

#include <cstdint>
#include <vector>

#include "m2o/rde.hpp"
#include "m2o/rng.hpp"

namespace m2o {

// Truncated Poisson weighted infinite tree: labels alternate with depth,
// each node carries the first `branching` points of a rate-1 Poisson
// process as edge lengths to its children, scaled by alpha when the node is
// o-labeled. Nodes are stored level by level; node (d, i) has children
// (d+1, i*branching + j). Every node stores its children's edge lengths, so
// a depth-D tree contains the level D+1 edge lengths as well.
struct TruncatedPwit {
    double alpha = 0.0;
    int depth = 0;
    int branching = 0;
    char root_label = 'o';
    std::vector<size_t> level_offset;   // first node index per depth, plus end
    std::vector<double> children_len;   // node_count * branching, sorted per node

    size_t node_count() const { return level_offset.back(); }
    char label_at(int d) const {
        return (d % 2 == 0) == (root_label == 'o') ? 'o' : 'm';
    }
    const double* lengths_of(size_t node) const {
        return children_len.data() + node * branching;
    }
};

// Deterministic per seed; per-node randomness is derived by hash chaining
// along the path, so re-sampling with a larger depth reproduces the shared
// part of the tree bit for bit. root_label '?' draws from the mixture
// o : m = alpha : 1. Throws when the node count would exceed node_cap.
TruncatedPwit sample_pwit(double alpha, int depth, int branching, uint64_t seed,
                          char root_label = '?', size_t node_cap = size_t(1) << 22);

// Exact zero-init synchronous BP restricted to the dependency cone: returns
// the iterate-k messages sent by the root's children toward the root.
// Requires 1 <= k <= depth.
std::vector<double> pwit_bp(const TruncatedPwit& tree, int k);

// Message-distribution run over a lazily generated ensemble: both label
// pools evolve through k_max zero-init iterates (each sample draws a fresh
// Poisson process and recycles subtree messages from the previous pool) and
// are compared against the fixed-point laws per iterate.
struct PwitPoolRun {
    struct Row {
        int k = 0;
        double ks_o = 0.0;  // o-labeled senders vs F
        double ks_m = 0.0;  // m-labeled senders vs G
    };
    std::vector<Row> rows;
    std::vector<double> final_o, final_m;
};
PwitPoolRun pwit_pooled_messages(double alpha, int k_max, int branching,
                                 size_t n_samples, uint64_t seed);

}  // namespace m2o
