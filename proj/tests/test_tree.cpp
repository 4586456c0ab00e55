#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <limits>

#include "m2o/rng.hpp"
#include "m2o/tree.hpp"

using namespace m2o;

namespace {

// Oracle: enumerate every edge subset (an edge per non-root vertex) and keep
// the cheapest one that is a many-to-one matching. skip_root drops the root
// and its edges, giving C(T \ root).
double enumerate_tree_optimum(const LabeledTree& tree, bool skip_root, bool& feasible) {
    const int v = tree.size();
    double best = std::numeric_limits<double>::infinity();
    for (uint64_t mask = 0; mask < (uint64_t(1) << (v - 1)); ++mask) {
        std::vector<int> degree(v, 0);
        double cost = 0.0;
        bool uses_root_edge = false;
        for (int u = 1; u < v; ++u) {
            if (!(mask >> (u - 1) & 1)) continue;
            ++degree[u];
            ++degree[tree.parent[u]];
            if (skip_root && (u == 0 || tree.parent[u] == 0)) uses_root_edge = true;
            cost += tree.edge_len[u];
        }
        if (uses_root_edge) continue;
        bool ok = true;
        for (int u = 0; u < v; ++u) {
            if (skip_root && u == 0) continue;
            if (tree.label[u] == 'o' && degree[u] != 1) ok = false;
            if (tree.label[u] == 'm' && degree[u] < 1) ok = false;
        }
        if (ok) best = std::min(best, cost);
    }
    feasible = best < std::numeric_limits<double>::infinity();
    return best;
}

}  // namespace

TEST_CASE("single edge tree") {
    LabeledTree t;
    t.parent = {-1, 0};
    t.label = {'o', 'm'};
    t.edge_len = {0.0, 5.0};
    auto dp = tree_dp(t).root();
    CHECK(dp.c_with.feasible);
    CHECK(dp.c_with.value == doctest::Approx(5.0));
    CHECK_FALSE(dp.c_without.feasible);  // isolated m-leaf
}

TEST_CASE("star with forced leaves") {
    LabeledTree t;
    t.parent = {-1, 0, 0, 0};
    t.label = {'m', 'o', 'o', 'o'};
    t.edge_len = {0.0, 1.0, 2.0, 3.0};
    auto dp = tree_dp(t).root();
    CHECK(dp.c_with.feasible);
    CHECK(dp.c_with.value == doctest::Approx(6.0));
    CHECK_FALSE(dp.c_without.feasible);
    auto matched = tree_dp_matching(t);
    CHECK(matched == std::vector<char>{0, 1, 1, 1});
}

TEST_CASE("tree_dp equals subset enumeration on random trees") {
    RngStream rs(808);
    for (int trial = 0; trial < 120; ++trial) {
        int n_m = 1 + static_cast<int>(rs.next_below(3));
        int n_o = n_m + static_cast<int>(rs.next_below(1 + 9 - 2 * n_m));
        if (n_o + n_m > 10 || n_o < n_m) continue;
        auto tree = random_feasible_tree(n_o, n_m, rs);
        auto dp = tree_dp(tree).root();
        bool feasible = false;
        double oracle = enumerate_tree_optimum(tree, false, feasible);
        CHECK(dp.c_with.feasible == feasible);
        if (feasible) CHECK(dp.c_with.value == doctest::Approx(oracle).epsilon(1e-12));

        double oracle_wo = enumerate_tree_optimum(tree, true, feasible);
        CHECK(dp.c_without.feasible == feasible);
        if (feasible) CHECK(dp.c_without.value == doctest::Approx(oracle_wo).epsilon(1e-12));
    }
}

TEST_CASE("extracted matching is valid and achieves the dp value") {
    RngStream rs(4242);
    for (int trial = 0; trial < 60; ++trial) {
        int n_m = 1 + static_cast<int>(rs.next_below(4));
        int n_o = n_m + static_cast<int>(rs.next_below(8));
        auto tree = random_feasible_tree(n_o, n_m, rs);
        auto dp = tree_dp(tree).root();
        REQUIRE(dp.c_with.feasible);
        auto matched = tree_dp_matching(tree);

        std::vector<int> degree(tree.size(), 0);
        double cost = 0.0;
        for (int v = 1; v < tree.size(); ++v) {
            if (!matched[v]) continue;
            ++degree[v];
            ++degree[tree.parent[v]];
            cost += tree.edge_len[v];
        }
        for (int v = 0; v < tree.size(); ++v) {
            if (tree.label[v] == 'o') CHECK(degree[v] == 1);
            else CHECK(degree[v] >= 1);
        }
        CHECK(cost == doctest::Approx(dp.c_with.value).epsilon(1e-12));
    }
}

TEST_CASE("difference identity at an o-root") {
    RngStream rs(99);
    int checked = 0;
    for (int trial = 0; trial < 200 && checked < 40; ++trial) {
        int n_m = 1 + static_cast<int>(rs.next_below(4));
        int n_o = n_m + 1 + static_cast<int>(rs.next_below(8));
        auto tree = random_feasible_tree(n_o, n_m, rs);
        if (tree.label[0] != 'o') continue;
        auto dp = tree_dp(tree);
        if (!dp.c_with[0].feasible || !dp.c_without[0].feasible) continue;

        double lhs = dp.c_with[0].value - dp.c_without[0].value;
        double rhs = std::numeric_limits<double>::infinity();
        bool all_finite = true;
        for (int v = 1; v < tree.size(); ++v) {
            if (tree.parent[v] != 0) continue;
            EdgeGap gap = subtree_gap(tree, v, 0);
            if (gap.code != 0) {
                all_finite = false;
                break;
            }
            rhs = std::min(rhs, tree.edge_len[v] - std::max(gap.value, 0.0));
        }
        if (!all_finite) continue;
        CHECK(lhs == doctest::Approx(rhs).epsilon(1e-10));
        ++checked;
    }
    CHECK(checked >= 10);
}

TEST_CASE("random_feasible_tree invariants") {
    RngStream rs(6);
    for (int trial = 0; trial < 50; ++trial) {
        int n_m = 1 + static_cast<int>(rs.next_below(5));
        int n_o = n_m + static_cast<int>(rs.next_below(10));
        auto tree = random_feasible_tree(n_o, n_m, rs);
        CHECK(tree.size() == n_o + n_m);
        for (int v = 1; v < tree.size(); ++v) {
            CHECK(tree.label[v] != tree.label[tree.parent[v]]);
            CHECK(tree.edge_len[v] > 0.0);
        }
        CHECK(tree_dp(tree).root().c_with.feasible);
        CHECK(tree_diameter(tree) >= 1);
    }
}

TEST_CASE("tree embedding keeps edge weights and pads the rest") {
    RngStream rs(12);
    auto tree = random_feasible_tree(5, 3, rs);
    auto emb = tree_to_instance(tree);
    CHECK(emb.inst.n == 5);
    CHECK(emb.inst.m == 3);
    CHECK(many_side_count(emb.inst.n, emb.inst.alpha) == emb.inst.m);
    int tree_edges = 0;
    for (double w : emb.inst.weights) tree_edges += (w != emb.pad_weight);
    CHECK(tree_edges == tree.size() - 1);
    for (int v = 1; v < tree.size(); ++v) {
        int o = tree.label[v] == 'o' ? v : tree.parent[v];
        int q = tree.label[v] == 'o' ? tree.parent[v] : v;
        CHECK(emb.inst.w(emb.side_index[o], emb.side_index[q]) == tree.edge_len[v]);
    }
}

TEST_CASE("subtree_gap codes") {
    LabeledTree t;  // o-root, m-child, o-grandchild
    t.parent = {-1, 0, 1};
    t.label = {'o', 'm', 'o'};
    t.edge_len = {0.0, 2.0, 3.0};
    // leaf grandchild toward its parent: single o-vertex, infeasible with
    EdgeGap leaf = subtree_gap(t, 2, 1);
    CHECK(leaf.code == +1);
    // m-child subtree (child + grandchild): with = 3, without = infeasible
    EdgeGap mid = subtree_gap(t, 1, 0);
    CHECK(mid.code == -1);
}
