#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "m2o/exact.hpp"
#include "m2o/hungarian.hpp"
#include "m2o/instance.hpp"
#include "m2o/rng.hpp"

using namespace m2o;

namespace {

// permutation oracle for the assignment problem
double lap_by_enumeration(const std::vector<double>& cost, int n) {
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    double best = std::numeric_limits<double>::infinity();
    do {
        double s = 0.0;
        for (int i = 0; i < n; ++i) s += cost[i * n + perm[i]];
        best = std::min(best, s);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

BipartiteInstance small_random(int n, int m, RngStream& rs) {
    BipartiteInstance inst;
    inst.n = n;
    inst.m = m;
    inst.alpha = static_cast<double>(n) / m + 0.01;
    inst.weights.resize(static_cast<size_t>(n) * m);
    for (double& w : inst.weights) w = rs.next_exp(1.0);
    return inst;
}

}  // namespace

TEST_CASE("assignment_solve on known matrices") {
    std::vector<int> sol;
    CHECK(assignment_solve({1, 10, 10, 1}, 2, sol) == doctest::Approx(2.0));
    CHECK(sol == std::vector<int>{0, 1});
    CHECK(assignment_solve({5}, 1, sol) == doctest::Approx(5.0));
}

TEST_CASE("assignment_solve matches permutation enumeration") {
    RngStream rs(2024);
    for (int trial = 0; trial < 60; ++trial) {
        int n = 2 + static_cast<int>(rs.next_below(5));
        std::vector<double> cost(static_cast<size_t>(n) * n);
        for (double& c : cost) c = rs.next_exp(1.0);
        std::vector<int> sol;
        double got = assignment_solve(cost, n, sol);
        CHECK(got == doctest::Approx(lap_by_enumeration(cost, n)).epsilon(1e-12));
        std::vector<char> used(n, 0);
        for (int j : sol) {
            CHECK(j >= 0);
            CHECK(!used[j]);
            used[j] = 1;
        }
    }
}

TEST_CASE("brute_force forced and bijection cases") {
    BipartiteInstance inst;
    inst.n = 2;
    inst.m = 1;
    inst.alpha = 2.0;
    inst.weights = {3.0, 4.0};
    auto res = brute_force(inst);
    CHECK(res.cost == doctest::Approx(7.0));
    CHECK(res.matching.assign == std::vector<int>{0, 0});

    BipartiteInstance sq;
    sq.n = 2;
    sq.m = 2;
    sq.alpha = 1.4;
    sq.weights = {1.0, 10.0, 10.0, 1.0};
    auto res2 = brute_force(sq);
    CHECK(res2.cost == doctest::Approx(2.0));
    CHECK(res2.matching.assign == std::vector<int>{0, 1});
}

TEST_CASE("brute_force tie-break is lexicographic") {
    BipartiteInstance inst;
    inst.n = 3;
    inst.m = 2;
    inst.alpha = 1.6;
    inst.weights.assign(6, 1.0);
    auto res = brute_force(inst);
    CHECK(res.matching.assign == std::vector<int>{0, 0, 1});
    CHECK(res.cost == doctest::Approx(3.0));
}

TEST_CASE("brute_force rejects instances above the cap") {
    auto inst = gen_instance(10, 1.5, 1);
    CHECK_THROWS(brute_force(inst));
}

TEST_CASE("reduction_solve equals brute force across random small instances") {
    RngStream rs(555);
    int done = 0;
    while (done < 220) {
        int n = 2 + static_cast<int>(rs.next_below(6));  // 2..7
        int m = 1 + static_cast<int>(rs.next_below(4));  // 1..4
        if (m > n) continue;
        auto inst = small_random(n, m, rs);
        auto bf = brute_force(inst);
        auto red = reduction_solve(inst);
        CHECK(std::fabs(bf.cost - red.cost) < 1e-9);
        CHECK(is_feasible(inst, red.matching));
        CHECK(is_feasible(inst, bf.matching));
        ++done;
    }
}

TEST_CASE("reduction_solve examples") {
    BipartiteInstance inst;
    inst.n = 2;
    inst.m = 1;
    inst.alpha = 2.0;
    inst.weights = {3.0, 4.0};
    CHECK(reduction_solve(inst).cost == doctest::Approx(7.0));

    RngStream rs(9);
    auto sq = small_random(5, 5, rs);
    CHECK(reduction_solve(sq).cost == doctest::Approx(brute_force(sq).cost));
}

TEST_CASE("optimal cost is nondecreasing under pointwise weight increase") {
    RngStream rs(31337);
    for (int trial = 0; trial < 40; ++trial) {
        auto inst = small_random(6, 3, rs);
        auto bumped = inst;
        double c = rs.next_unit();
        for (double& w : bumped.weights) w += c;
        CHECK(reduction_solve(bumped).cost >= reduction_solve(inst).cost - 1e-12);
    }
}
