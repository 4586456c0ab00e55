#include "m2o/tree.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace m2o {

namespace {

std::vector<std::vector<int>> children_lists(const LabeledTree& tree) {
    std::vector<std::vector<int>> ch(tree.size());
    for (int v = 0; v < tree.size(); ++v) {
        int p = tree.parent[v];
        if (p < 0) continue;
        if (tree.label[v] == tree.label[p])
            throw std::invalid_argument("tree labels do not alternate");
        ch[p].push_back(v);
    }
    return ch;
}

std::vector<int> postorder(const std::vector<std::vector<int>>& ch) {
    std::vector<int> order;
    order.reserve(ch.size());
    std::vector<int> stack{0};
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        order.push_back(v);
        for (int u : ch[v]) stack.push_back(u);
    }
    std::reverse(order.begin(), order.end());
    return order;
}

// Children of an m-vertex chosen to be matched to it: every child whose
// subtree cannot cover itself, all strictly negative marginal terms, and if
// that leaves the set empty, the single cheapest attachable child.
std::vector<int> m_node_choice(const LabeledTree& tree, const TreeDp& dp,
                               const std::vector<int>& ch) {
    std::vector<int> picked;
    bool forced = false;
    for (int u : ch) {
        if (!dp.c_with[u].feasible) {
            picked.push_back(u);
            forced = true;
        }
    }
    int best = -1;
    double best_t = 0.0;
    for (int u : ch) {
        if (!dp.c_with[u].feasible || !dp.c_without[u].feasible) continue;
        double t = tree.edge_len[u] + dp.c_without[u].value - dp.c_with[u].value;
        if (t < 0.0) {
            picked.push_back(u);
        } else if (best < 0 || t < best_t) {
            best = u;
            best_t = t;
        }
    }
    if (picked.empty() && !forced && best >= 0) picked.push_back(best);
    return picked;  // empty means no nonempty I exists: infeasible
}

// Matched child of an o-vertex plus whether that child keeps its own
// subtree constraint (true) or is deleted below (false).
std::pair<int, bool> o_node_choice(const LabeledTree& tree, const TreeDp& dp,
                                   const std::vector<int>& ch) {
    int n_inf = 0;
    for (int u : ch) n_inf += !dp.c_with[u].feasible;
    int pick = -1;
    bool pick_with = false;
    TreeCost best = TreeCost::infeasible();
    double sum_fin = 0.0;
    for (int u : ch)
        if (dp.c_with[u].feasible) sum_fin += dp.c_with[u].value;
    for (int u : ch) {
        if (n_inf - (dp.c_with[u].feasible ? 0 : 1) > 0) continue;
        TreeCost sub = cost_less(dp.c_with[u], dp.c_without[u]) ? dp.c_with[u] : dp.c_without[u];
        if (!sub.feasible) continue;
        double others = sum_fin - (dp.c_with[u].feasible ? dp.c_with[u].value : 0.0);
        TreeCost cand{tree.edge_len[u] + sub.value + others, true};
        if (cost_less(cand, best)) {
            best = cand;
            pick = u;
            pick_with = cost_less(dp.c_with[u], dp.c_without[u]);
        }
    }
    return {pick, pick_with};
}

}  // namespace

TreeDp tree_dp(const LabeledTree& tree) {
    if (tree.size() == 0) throw std::invalid_argument("empty tree");
    auto ch = children_lists(tree);
    auto order = postorder(ch);

    TreeDp dp;
    dp.c_with.assign(tree.size(), TreeCost::infeasible());
    dp.c_without.assign(tree.size(), TreeCost{0.0, true});

    for (int v : order) {
        if (ch[v].empty()) continue;  // leaf: c_with infeasible, c_without 0

        TreeCost without{0.0, true};
        for (int u : ch[v]) without = without + dp.c_with[u];
        dp.c_without[v] = without;

        if (tree.label[v] == 'o') {
            auto [pick, pick_with] = o_node_choice(tree, dp, ch[v]);
            (void)pick_with;
            if (pick < 0) {
                dp.c_with[v] = TreeCost::infeasible();
            } else {
                TreeCost sub =
                    cost_less(dp.c_with[pick], dp.c_without[pick]) ? dp.c_with[pick]
                                                                   : dp.c_without[pick];
                double others = 0.0;
                bool ok = true;
                for (int u : ch[v]) {
                    if (u == pick) continue;
                    if (!dp.c_with[u].feasible) ok = false;
                    else others += dp.c_with[u].value;
                }
                assert(ok);
                dp.c_with[v] = TreeCost{tree.edge_len[pick] + sub.value + others, true};
            }
        } else {
            // m vertex: base cost leaves every feasible child covered by its
            // own subtree, then the picked set I swaps in parent edges.
            bool dead = false;
            double base = 0.0;
            for (int u : ch[v]) {
                if (dp.c_with[u].feasible) base += dp.c_with[u].value;
                else if (!dp.c_without[u].feasible) dead = true;
            }
            if (dead) {
                dp.c_with[v] = TreeCost::infeasible();
                continue;
            }
            auto picked = m_node_choice(tree, dp, ch[v]);
            if (picked.empty()) {
                dp.c_with[v] = TreeCost::infeasible();
                continue;
            }
            double total = base;
            for (int u : picked) {
                double swap_in = tree.edge_len[u] + dp.c_without[u].value;
                if (dp.c_with[u].feasible) swap_in -= dp.c_with[u].value;
                total += swap_in;
            }
            dp.c_with[v] = TreeCost{total, true};
        }
    }
    return dp;
}

std::vector<char> tree_dp_matching(const LabeledTree& tree) {
    TreeDp dp = tree_dp(tree);
    if (!dp.c_with[0].feasible)
        throw std::invalid_argument("tree admits no many-to-one matching");
    auto ch = children_lists(tree);

    std::vector<char> in_matching(tree.size(), 0);
    // state: 1 = subtree solved with the vertex constraint, 0 = vertex deleted
    std::vector<std::pair<int, char>> stack{{0, 1}};
    while (!stack.empty()) {
        auto [v, with] = stack.back();
        stack.pop_back();
        if (!with) {
            for (int u : ch[v]) stack.push_back({u, 1});
            continue;
        }
        if (ch[v].empty()) continue;
        if (tree.label[v] == 'o') {
            auto [pick, pick_with] = o_node_choice(tree, dp, ch[v]);
            assert(pick >= 0);
            in_matching[pick] = 1;
            for (int u : ch[v]) stack.push_back({u, u == pick ? pick_with : char(1)});
        } else {
            auto picked = m_node_choice(tree, dp, ch[v]);
            for (int u : picked) in_matching[u] = 1;
            for (int u : ch[v]) {
                bool in = std::find(picked.begin(), picked.end(), u) != picked.end();
                stack.push_back({u, in ? char(0) : char(1)});
            }
        }
    }
    return in_matching;
}

namespace {

std::vector<std::vector<int>> adjacency(const LabeledTree& tree) {
    std::vector<std::vector<int>> adj(tree.size());
    for (int v = 0; v < tree.size(); ++v) {
        int p = tree.parent[v];
        if (p < 0) continue;
        adj[v].push_back(p);
        adj[p].push_back(v);
    }
    return adj;
}

double undirected_len(const LabeledTree& tree, int a, int b) {
    return tree.parent[a] == b ? tree.edge_len[a] : tree.edge_len[b];
}

}  // namespace

EdgeGap subtree_gap(const LabeledTree& tree, int x, int toward) {
    auto adj = adjacency(tree);
    LabeledTree sub;
    std::vector<int> map_to(tree.size(), -1);
    std::vector<int> bfs{x};
    map_to[x] = 0;
    sub.parent.push_back(-1);
    sub.label.push_back(tree.label[x]);
    sub.edge_len.push_back(0.0);
    for (size_t i = 0; i < bfs.size(); ++i) {
        int v = bfs[i];
        for (int u : adj[v]) {
            if (u == toward && v == x) continue;
            if (map_to[u] >= 0) continue;
            map_to[u] = static_cast<int>(sub.parent.size());
            sub.parent.push_back(map_to[v]);
            sub.label.push_back(tree.label[u]);
            sub.edge_len.push_back(undirected_len(tree, u, v));
            bfs.push_back(u);
        }
    }
    TreeDp dp = tree_dp(sub);
    TreeCost cw = dp.c_with[0], co = dp.c_without[0];
    if (cw.feasible && co.feasible) return {cw.value - co.value, 0};
    if (!cw.feasible && co.feasible) return {0.0, +1};
    if (cw.feasible && !co.feasible) return {0.0, -1};
    return {0.0, 2};
}

int tree_diameter(const LabeledTree& tree) {
    auto adj = adjacency(tree);
    auto farthest = [&](int start) {
        std::vector<int> dist(tree.size(), -1);
        std::vector<int> bfs{start};
        dist[start] = 0;
        int best = start;
        for (size_t i = 0; i < bfs.size(); ++i) {
            int v = bfs[i];
            if (dist[v] > dist[best]) best = v;
            for (int u : adj[v])
                if (dist[u] < 0) {
                    dist[u] = dist[v] + 1;
                    bfs.push_back(u);
                }
        }
        return std::pair<int, int>{best, dist[best]};
    };
    auto [a, _] = farthest(0);
    return farthest(a).second;
}

LabeledTree random_feasible_tree(int n_o, int n_m, RngStream& rng) {
    if (n_o < n_m || n_m < 1) throw std::invalid_argument("need n_o >= n_m >= 1");
    const int total = n_o + n_m;
    // vertices 0..n_m-1 are m-centers, the rest are o-vertices
    std::vector<std::pair<int, int>> edges;
    std::vector<int> center_of(n_o);
    for (int i = 0; i < n_o; ++i) {
        int c = (i < n_m) ? i : static_cast<int>(rng.next_below(n_m));
        center_of[i] = c;
        edges.push_back({n_m + i, c});
    }
    // connect the stars through o-vertices already absorbed
    std::vector<int> grown_o{n_m + 0};
    for (int i = 1; i < n_o; ++i)
        if (center_of[i] == 0) grown_o.push_back(n_m + i);
    for (int c = 1; c < n_m; ++c) {
        int via = grown_o[rng.next_below(grown_o.size())];
        edges.push_back({via, c});
        for (int i = 0; i < n_o; ++i)
            if (center_of[i] == c) grown_o.push_back(n_m + i);
    }

    std::vector<std::vector<int>> adj(total);
    for (auto [a, b] : edges) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    // root at a random vertex, renumber by BFS
    int root = static_cast<int>(rng.next_below(total));
    LabeledTree tree;
    tree.parent.assign(total, -2);
    tree.label.assign(total, '?');
    tree.edge_len.assign(total, 0.0);
    std::vector<int> map_to(total, -1), bfs{root};
    map_to[root] = 0;
    tree.parent[0] = -1;
    tree.label[0] = root < n_m ? 'm' : 'o';
    int next = 1;
    for (size_t i = 0; i < bfs.size(); ++i) {
        int v = bfs[i];
        for (int u : adj[v]) {
            if (map_to[u] >= 0) continue;
            map_to[u] = next;
            tree.parent[next] = map_to[v];
            tree.label[next] = u < n_m ? 'm' : 'o';
            tree.edge_len[next] = 0.1 + rng.next_unit();
            ++next;
            bfs.push_back(u);
        }
    }
    return tree;
}

TreeEmbedding tree_to_instance(const LabeledTree& tree) {
    int n = 0, m = 0;
    double total_len = 0.0;
    std::vector<int> side_index(tree.size());
    for (int v = 0; v < tree.size(); ++v) {
        side_index[v] = (tree.label[v] == 'o') ? n++ : m++;
        if (tree.parent[v] >= 0) total_len += tree.edge_len[v];
    }
    if (m < 1 || m > n) throw std::invalid_argument("embedding needs #o >= #m >= 1");

    TreeEmbedding emb;
    emb.side_index = std::move(side_index);
    emb.pad_weight = 1e6 * (1.0 + total_len);
    emb.inst.n = n;
    emb.inst.m = m;
    emb.inst.alpha = (m == n) ? 1.0 + 0.5 / n
                              : 0.5 * (static_cast<double>(n) / m +
                                       (m == 1 ? static_cast<double>(n) + 2.0
                                               : static_cast<double>(n) / (m - 1)));
    assert(many_side_count(n, emb.inst.alpha) == m);
    emb.inst.seed = 0;
    emb.inst.weights.assign(static_cast<size_t>(n) * m, emb.pad_weight);
    for (int v = 0; v < tree.size(); ++v) {
        int p = tree.parent[v];
        if (p < 0) continue;
        int o = tree.label[v] == 'o' ? v : p;
        int q = tree.label[v] == 'o' ? p : v;
        emb.inst.w(emb.side_index[o], emb.side_index[q]) = tree.edge_len[v];
    }
    return emb;
}

}  // namespace m2o
