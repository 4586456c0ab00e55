#pragma once

#include <vector>

#include "m2o/instance.hpp"

namespace m2o {

// Two directed message planes for one iterate. to_b[a*m+b] is the message
// A-vertex a sends toward B-vertex b; to_a[b*n+a] the message b sends toward
// a. Both planes are read as the k-iterate while the k+1 planes are written
// (synchronous update, double buffered by the caller).
struct MessageState {
    int k = 0;
    std::vector<double> to_b;  // n x m
    std::vector<double> to_a;  // m x n
};

MessageState bp_init(const BipartiteInstance& inst);

// One synchronous update. Every per-vertex sweep uses the two-smallest-values
// trick, so a full step is O(n*m). B-side messages pass through a positive
// part and stay >= 0. The empty exclusion set (n = 1 or m = 1) yields +inf.
void bp_step(const BipartiteInstance& inst, const MessageState& in, MessageState& out);
void bp_step_serial(const BipartiteInstance& inst, const MessageState& in, MessageState& out);

struct DecisionMap {
    std::vector<int> a_choice;           // per A vertex, argmin B partner
    std::vector<std::vector<int>> b_choice;  // per B vertex, argmin set over A
};

// Decision rule at iterate k: a_choice[a] minimizes w(a,b) - to_a[b][a],
// ties to the lowest index. b_choice[b] collects every a with strictly
// negative w(a,b) - to_b[a][b], or the single positive-part argmin if none.
DecisionMap bp_decide(const BipartiteInstance& inst, const MessageState& state);

// Greedy patching of the partial matching {a -> a_choice[a]}: while some B
// vertex is uncovered, move the globally cheapest (surplus A, uncovered B)
// pair. Surplus = A vertices whose current partner has degree >= 2.
ManyToOneMatching bp_repair(const BipartiteInstance& inst, const DecisionMap& decision);

struct BpIterationStats {
    int k = 0;
    double delta_to_b = 0.0;  // sup-norm change of the A-side plane
    double delta_to_a = 0.0;
    int uncovered = 0;        // B vertices missed by the current a_choice
};

struct BpResult {
    ManyToOneMatching matching;
    double cost = 0.0;
    int uncovered_before_repair = 0;
    std::vector<BpIterationStats> iterations;
};

BpResult bp_solve(const BipartiteInstance& inst, int k_max, bool collect_stats = true);

}  // namespace m2o
