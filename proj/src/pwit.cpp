#include "m2o/pwit.hpp"

#include <cmath>
#include <stdexcept>

#include "m2o/popdyn.hpp"
#include "m2o/stats.hpp"

namespace m2o {

namespace {

inline double pos(double x) { return x > 0.0 ? x : 0.0; }

// Children edge lengths of one node: Poisson points from the node's own
// stream, scaled by alpha at o-labeled nodes.
void fill_children(double scale, uint64_t node_seed, int branching, double* out) {
    RngStream rs(node_seed, stream::pwit);
    double t = 0.0;
    for (int j = 0; j < branching; ++j) {
        t += rs.next_exp();
        out[j] = scale * t;
    }
}

}  // namespace

TruncatedPwit sample_pwit(double alpha, int depth, int branching, uint64_t seed,
                          char root_label, size_t node_cap) {
    if (!(alpha > 1.0)) throw std::invalid_argument("sample_pwit: alpha must be > 1");
    if (depth < 1 || branching < 8) throw std::invalid_argument("sample_pwit: need depth >= 1, branching >= 8");

    TruncatedPwit tree;
    tree.alpha = alpha;
    tree.depth = depth;
    tree.branching = branching;
    if (root_label == '?') {
        RngStream rs(seed, stream::labels);
        root_label = rs.next_unit() < alpha / (1.0 + alpha) ? 'o' : 'm';
    }
    tree.root_label = root_label;

    tree.level_offset.assign(depth + 2, 0);
    size_t count = 1;
    for (int d = 0; d <= depth; ++d) {
        tree.level_offset[d + 1] = tree.level_offset[d] + count;
        if (count > node_cap / static_cast<size_t>(branching)) count = node_cap + 1;
        else count *= static_cast<size_t>(branching);
        if (tree.level_offset[d + 1] > node_cap)
            throw std::runtime_error("sample_pwit: node cap exceeded");
    }

    tree.children_len.resize(tree.node_count() * branching);
    std::vector<uint64_t> level_seeds{mix64(seed ^ 0x70776974ULL)};
    for (int d = 0; d <= depth; ++d) {
        const double scale = tree.label_at(d) == 'o' ? alpha : 1.0;
        const size_t base = tree.level_offset[d];
#pragma omp parallel for schedule(static)
        for (long i = 0; i < static_cast<long>(level_seeds.size()); ++i)
            fill_children(scale, level_seeds[i], branching,
                          tree.children_len.data() + (base + i) * branching);
        if (d == depth) break;
        std::vector<uint64_t> next(level_seeds.size() * branching);
        for (size_t i = 0; i < level_seeds.size(); ++i)
            for (int j = 0; j < branching; ++j)
                next[i * branching + j] = mix64(level_seeds[i] ^ static_cast<uint64_t>(j + 1));
        level_seeds = std::move(next);
    }
    return tree;
}

std::vector<double> pwit_bp(const TruncatedPwit& tree, int k) {
    if (k < 1 || k > tree.depth)
        throw std::invalid_argument("pwit_bp: need 1 <= k <= depth (boundary contamination)");
    const int P = tree.branching;

    // Diagonal leaf-up pass: nodes at depth d contribute their iterate
    // (k+1-d) message, starting from iterate 1 at depth k, which only needs
    // the stored child edge lengths (iterate-0 messages are all zero).
    std::vector<double> msgs;
    for (int d = k; d >= 1; --d) {
        const bool clamp = tree.label_at(d) == 'm';
        const size_t base = tree.level_offset[d];
        const size_t count = tree.level_offset[d + 1] - tree.level_offset[d];
        std::vector<double> next(count);
#pragma omp parallel for schedule(static)
        for (long i = 0; i < static_cast<long>(count); ++i) {
            const double* len = tree.lengths_of(base + i);
            double best = 0.0;
            for (int j = 0; j < P; ++j) {
                double incoming = (d == k) ? 0.0 : msgs[static_cast<size_t>(i) * P + j];
                double v = len[j] - incoming;
                if (clamp) v = pos(v);
                if (j == 0 || v < best) best = v;
            }
            next[i] = best;
        }
        msgs = std::move(next);
    }
    return msgs;  // one message per root child
}

PwitPoolRun pwit_pooled_messages(double alpha, int k_max, int branching,
                                 size_t n_samples, uint64_t seed) {
    if (k_max < 1) throw std::invalid_argument("k_max must be >= 1");
    const RdeConstants c = rde_constants(alpha);
    PwitPoolRun run;

    // Zero-init synchronous iterates of both label pools; the o pool holds
    // messages sent by o-labeled vertices (law -> F), the m pool messages
    // sent by m-labeled vertices (law -> G).
    std::vector<double> pool_o(n_samples, 0.0), pool_m(n_samples, 0.0);
    std::vector<double> next_o, next_m;
    double high = 0.0;
    for (int k = 1; k <= k_max; ++k) {
        uint64_t so = mix64(seed ^ (2 * static_cast<uint64_t>(k)));
        uint64_t sm = mix64(seed ^ (2 * static_cast<uint64_t>(k) + 1));
        phi_half_step(pool_m, alpha, branching, so, next_o, high);
        gamma_half_step(pool_o, branching, sm, next_m, high);
        pool_o.swap(next_o);
        pool_m.swap(next_m);

        PwitPoolRun::Row row;
        row.k = k;
        row.ks_o = ks_statistic(pool_o, [&](double t) { return F_cdf(c, t); });
        row.ks_m = ks_statistic(pool_m, [&](double t) { return G_cdf(c, t); },
                                [&](double t) { return G_cdf_left(c, t); });
        run.rows.push_back(row);
    }
    run.final_o = std::move(pool_o);
    run.final_m = std::move(pool_m);
    return run;
}

}  // namespace m2o
