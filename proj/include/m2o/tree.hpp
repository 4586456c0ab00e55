#pragma once

#include <vector>

#include "m2o/instance.hpp"
#include "m2o/rng.hpp"

namespace m2o {

// Rooted tree with o/m vertex labels alternating along edges. Vertex 0 is
// the root; edge_len[v] is the length of the edge from v to parent[v].
struct LabeledTree {
    std::vector<int> parent;      // -1 for the root
    std::vector<char> label;      // 'o' (degree exactly 1) or 'm' (degree >= 1)
    std::vector<double> edge_len; // undefined at the root

    int size() const { return static_cast<int>(parent.size()); }
};

// Cost value that can be infeasible. Infeasible absorbs through sums and is
// never picked by min over a finite alternative; an explicit tag instead of
// a float sentinel so sums cannot silently corrupt.
struct TreeCost {
    double value = 0.0;
    bool feasible = true;

    static TreeCost infeasible() { return {0.0, false}; }
    friend TreeCost operator+(TreeCost a, TreeCost b) {
        if (!a.feasible || !b.feasible) return infeasible();
        return {a.value + b.value, true};
    }
};

inline bool cost_less(TreeCost a, TreeCost b) {
    if (!b.feasible) return a.feasible;
    if (!a.feasible) return false;
    return a.value < b.value;
}

struct TreeDpResult {
    TreeCost c_with;     // min cost matching of the subtree, root constraint enforced
    TreeCost c_without;  // root deleted
};

// Bottom-up DP over the whole tree. Also exposes the values for every
// vertex's subtree and, when the tree is feasible, the optimal matching as
// the set of child vertices whose parent edge is used.
struct TreeDp {
    std::vector<TreeCost> c_with;
    std::vector<TreeCost> c_without;
    TreeDpResult root() const { return {c_with[0], c_without[0]}; }
};

TreeDp tree_dp(const LabeledTree& tree);

// in_matching[v] == 1 iff the edge {v, parent[v]} belongs to the minimum
// cost many-to-one matching. Requires a feasible tree; ties broken toward
// lower vertex index.
std::vector<char> tree_dp_matching(const LabeledTree& tree);

// The difference C(T_x) - C(T_x \ x) for the subtree hanging from the
// directed edge (x -> toward), i.e. rooted at x with the `toward` side cut.
// finite / +inf (subtree cannot match x) / -inf (forest under x infeasible).
struct EdgeGap {
    double value = 0.0;
    int code = 0;  // 0 finite, +1 plus infinity, -1 minus infinity
};
EdgeGap subtree_gap(const LabeledTree& tree, int x, int toward);

// Longest path length in edges.
int tree_diameter(const LabeledTree& tree);

// Random bipartite tree over n_o o-vertices and n_m m-vertices that is
// guaranteed to admit a many-to-one matching (a star skeleton covering
// every m vertex is embedded by construction). Edge lengths U(0.1, 1.1).
LabeledTree random_feasible_tree(int n_o, int n_m, RngStream& rng);

// Embeds a labeled tree into a dense instance: o-vertices become the A side,
// m-vertices the B side, non-tree pairs get a pad weight large enough that
// they never enter an optimal matching. Returns the instance plus the
// mapping tree vertex -> instance index.
struct TreeEmbedding {
    BipartiteInstance inst;
    std::vector<int> side_index;  // tree vertex -> row (o) or column (m)
    double pad_weight = 0.0;
};
TreeEmbedding tree_to_instance(const LabeledTree& tree);

}  // namespace m2o
