#include "m2o/bp.hpp"

#include <cassert>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace m2o {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

inline double pos(double x) { return x > 0.0 ? x : 0.0; }

// Row sweep for one A vertex: out[b] = min over u != b of w(a,u) - to_a[u][a].
inline void a_row_update(const BipartiteInstance& inst, const double* to_a, int a,
                         double* out) {
    const int n = inst.n, m = inst.m;
    const double* row = inst.weights.data() + static_cast<size_t>(a) * m;
    double min1 = kInf, min2 = kInf;
    int arg1 = -1;
    for (int u = 0; u < m; ++u) {
        double v = row[u] - to_a[static_cast<size_t>(u) * n + a];
        if (v < min1) {
            min2 = min1;
            min1 = v;
            arg1 = u;
        } else if (v < min2) {
            min2 = v;
        }
    }
    for (int b = 0; b < m; ++b) out[b] = (b == arg1) ? min2 : min1;
}

// Column sweep for one B vertex with the positive part applied per term.
inline void b_col_update(const BipartiteInstance& inst, const double* to_b, int b,
                         double* out) {
    const int n = inst.n, m = inst.m;
    double min1 = kInf, min2 = kInf;
    int arg1 = -1;
    for (int u = 0; u < n; ++u) {
        double v = pos(inst.weights[static_cast<size_t>(u) * m + b] -
                       to_b[static_cast<size_t>(u) * m + b]);
        if (v < min1) {
            min2 = min1;
            min1 = v;
            arg1 = u;
        } else if (v < min2) {
            min2 = v;
        }
    }
    for (int a = 0; a < n; ++a) out[a] = (a == arg1) ? min2 : min1;
}

}  // namespace

MessageState bp_init(const BipartiteInstance& inst) {
    MessageState s;
    s.k = 0;
    s.to_b.assign(static_cast<size_t>(inst.n) * inst.m, 0.0);
    s.to_a.assign(static_cast<size_t>(inst.m) * inst.n, 0.0);
    return s;
}

static void check_dims(const BipartiteInstance& inst, const MessageState& s) {
    if (s.to_b.size() != static_cast<size_t>(inst.n) * inst.m ||
        s.to_a.size() != static_cast<size_t>(inst.m) * inst.n)
        throw std::invalid_argument("message state does not match instance");
}

void bp_step_serial(const BipartiteInstance& inst, const MessageState& in, MessageState& out) {
    check_dims(inst, in);
    out.to_b.resize(in.to_b.size());
    out.to_a.resize(in.to_a.size());
    for (int a = 0; a < inst.n; ++a)
        a_row_update(inst, in.to_a.data(), a, out.to_b.data() + static_cast<size_t>(a) * inst.m);
    for (int b = 0; b < inst.m; ++b)
        b_col_update(inst, in.to_b.data(), b, out.to_a.data() + static_cast<size_t>(b) * inst.n);
    out.k = in.k + 1;
}

void bp_step(const BipartiteInstance& inst, const MessageState& in, MessageState& out) {
    check_dims(inst, in);
    out.to_b.resize(in.to_b.size());
    out.to_a.resize(in.to_a.size());
    const int n = inst.n, m = inst.m;
#pragma omp parallel for schedule(static)
    for (int a = 0; a < n; ++a)
        a_row_update(inst, in.to_a.data(), a, out.to_b.data() + static_cast<size_t>(a) * m);
#pragma omp parallel for schedule(static)
    for (int b = 0; b < m; ++b)
        b_col_update(inst, in.to_b.data(), b, out.to_a.data() + static_cast<size_t>(b) * n);
    out.k = in.k + 1;
}

DecisionMap bp_decide(const BipartiteInstance& inst, const MessageState& state) {
    check_dims(inst, state);
    if (state.k < 1) throw std::invalid_argument("bp_decide needs k >= 1");
    const int n = inst.n, m = inst.m;
    DecisionMap d;
    d.a_choice.resize(n);
    d.b_choice.resize(m);

    for (int a = 0; a < n; ++a) {
        int arg = 0;
        double best = inst.w(a, 0) - state.to_a[a];
        for (int b = 1; b < m; ++b) {
            double v = inst.w(a, b) - state.to_a[static_cast<size_t>(b) * n + a];
            if (v < best) {
                best = v;
                arg = b;
            }
        }
        d.a_choice[a] = arg;
    }
    for (int b = 0; b < m; ++b) {
        auto& set = d.b_choice[b];
        int arg = -1;
        double best = kInf;
        for (int a = 0; a < n; ++a) {
            double diff = inst.w(a, b) - state.to_b[static_cast<size_t>(a) * m + b];
            if (diff < 0.0) set.push_back(a);
            double v = pos(diff);
            if (v < best) {
                best = v;
                arg = a;
            }
        }
        if (set.empty()) {
            if (arg < 0) throw std::runtime_error("bp_decide: empty argmin set");
            set.push_back(arg);
        }
    }
    return d;
}

ManyToOneMatching bp_repair(const BipartiteInstance& inst, const DecisionMap& decision) {
    const int n = inst.n, m = inst.m;
    if (static_cast<int>(decision.a_choice.size()) != n)
        throw std::invalid_argument("decision does not match instance");
    ManyToOneMatching match = make_matching(decision.a_choice, m);

    std::vector<int> uncovered;
    for (int b = 0; b < m; ++b)
        if (match.bdegree[b] == 0) uncovered.push_back(b);

    while (!uncovered.empty()) {
        int best_a = -1, best_b = -1, best_bi = -1;
        double best_w = kInf;
        for (int a = 0; a < n; ++a) {
            if (match.bdegree[match.assign[a]] < 2) continue;  // a is not surplus
            for (size_t i = 0; i < uncovered.size(); ++i) {
                double w = inst.w(a, uncovered[i]);
                if (w < best_w) {
                    best_w = w;
                    best_a = a;
                    best_b = uncovered[i];
                    best_bi = static_cast<int>(i);
                }
            }
        }
        // |surplus| >= |uncovered| by counting; exhaustion means a bug
        if (best_a < 0) throw std::logic_error("bp_repair: surplus set exhausted");
        --match.bdegree[match.assign[best_a]];
        match.assign[best_a] = best_b;
        ++match.bdegree[best_b];
        uncovered.erase(uncovered.begin() + best_bi);
    }
    assert(is_feasible(inst, match));
    return match;
}

BpResult bp_solve(const BipartiteInstance& inst, int k_max, bool collect_stats) {
    if (k_max < 1) throw std::invalid_argument("k_max must be >= 1");
    MessageState cur = bp_init(inst), next = bp_init(inst);
    BpResult res;
    for (int k = 0; k < k_max; ++k) {
        bp_step(inst, cur, next);
        if (collect_stats) {
            BpIterationStats st;
            st.k = next.k;
            // equal infinities count as unchanged
            for (size_t i = 0; i < next.to_b.size(); ++i) {
                double d = next.to_b[i] == cur.to_b[i] ? 0.0 : std::fabs(next.to_b[i] - cur.to_b[i]);
                if (d > st.delta_to_b) st.delta_to_b = d;
            }
            for (size_t i = 0; i < next.to_a.size(); ++i) {
                double d = next.to_a[i] == cur.to_a[i] ? 0.0 : std::fabs(next.to_a[i] - cur.to_a[i]);
                if (d > st.delta_to_a) st.delta_to_a = d;
            }
            DecisionMap d = bp_decide(inst, next);
            std::vector<char> hit(inst.m, 0);
            for (int b : d.a_choice) hit[b] = 1;
            for (char h : hit) st.uncovered += !h;
            res.iterations.push_back(st);
        }
        std::swap(cur, next);
    }
    DecisionMap d = bp_decide(inst, cur);
    std::vector<char> hit(inst.m, 0);
    for (int b : d.a_choice) hit[b] = 1;
    for (char h : hit) res.uncovered_before_repair += !h;
    res.matching = bp_repair(inst, d);
    res.cost = matching_cost(inst, res.matching);
    return res;
}

}  // namespace m2o
