#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <map>
#include <sstream>

#include "m2o/experiments.hpp"
#include "m2o/stats.hpp"

using namespace m2o;

TEST_CASE("run_mc emits identical CSV across reruns") {
    McConfig cfg;
    cfg.alpha = 2.0;
    cfg.n = 40;
    cfg.trials = 5;
    cfg.seed = 12345;
    cfg.solver = "exact";
    McSummary s1, s2;
    auto r1 = run_mc(cfg, s1);
    auto r2 = run_mc(cfg, s2);
    std::stringstream a, b;
    write_mc_csv(a, r1, s1);
    write_mc_csv(b, r2, s2);
    CHECK(a.str() == b.str());
    CHECK(a.str().find("trial,n,alpha,seed,solver,k,cost,cost_over_n,runtime_ms,"
                       "uncovered_before_repair") == 0);
}

TEST_CASE("brute and exact sweeps agree on small instances") {
    McConfig cfg;
    cfg.alpha = 2.0;
    cfg.n = 6;
    cfg.trials = 30;
    cfg.seed = 777;
    cfg.solver = "brute";
    McSummary sb, se;
    auto rb = run_mc(cfg, sb);
    cfg.solver = "exact";
    auto re = run_mc(cfg, se);
    for (int t = 0; t < cfg.trials; ++t) {
        CHECK(rb[t].seed == re[t].seed);
        CHECK(rb[t].cost == doctest::Approx(re[t].cost).epsilon(1e-12));
    }
}

TEST_CASE("bp sweep records iterate count and repairs") {
    McConfig cfg;
    cfg.alpha = 2.0;
    cfg.n = 80;
    cfg.trials = 4;
    cfg.seed = 31;
    cfg.solver = "bp";
    cfg.k_max = 20;
    McSummary s;
    auto rows = run_mc(cfg, s);
    for (const auto& r : rows) {
        CHECK(r.k == 20);
        CHECK(r.uncovered_before_repair >= 0);
        CHECK(r.cost_over_n == r.cost / r.n);
    }
    CHECK(s.c_star_value == doctest::Approx(2.074466016571925).epsilon(1e-12));
}

TEST_CASE("summary math is re-derivable from the rows") {
    McConfig cfg;
    cfg.alpha = 1.8;
    cfg.n = 30;
    cfg.trials = 8;
    cfg.seed = 99;
    McSummary s;
    auto rows = run_mc(cfg, s);
    std::vector<double> per_n;
    for (const auto& r : rows) per_n.push_back(r.cost_over_n);
    CHECK(s.mean_cost_over_n == doctest::Approx(mean(per_n)).epsilon(1e-15));
    CHECK(s.stderr_cost_over_n == doctest::Approx(stderr_of_mean(per_n)).epsilon(1e-15));
}

TEST_CASE("compare: feasibility bound and averaged improvement in k") {
    CompareConfig cfg;
    cfg.alpha = 2.0;
    cfg.n = 150;
    cfg.trials = 12;
    cfg.seed = 2468;
    cfg.ks = {5, 10, 25, 50};
    auto rows = run_compare(cfg);
    REQUIRE(rows.size() == 48);
    std::map<int, std::vector<double>> by_k;
    for (const auto& r : rows) {
        CHECK(r.ratio >= 1.0 - 1e-12);
        by_k[r.k].push_back(r.ratio);
    }
    double prev = 1e9;
    for (int k : cfg.ks) {
        double m = mean(by_k[k]);
        CHECK(m <= prev + 1e-12);
        prev = m;
    }
}

TEST_CASE("compare rows are deterministic and paired") {
    CompareConfig cfg;
    cfg.alpha = 1.6;
    cfg.n = 60;
    cfg.trials = 3;
    cfg.seed = 5;
    cfg.ks = {3, 8};
    auto r1 = run_compare(cfg);
    auto r2 = run_compare(cfg);
    REQUIRE(r1.size() == r2.size());
    for (size_t i = 0; i < r1.size(); ++i) {
        CHECK(r1[i].bp_cost == r2[i].bp_cost);
        CHECK(r1[i].exact_cost == r2[i].exact_cost);
    }
    // paired: the exact cost is shared within a trial
    CHECK(r1[0].exact_cost == r1[1].exact_cost);

    std::stringstream csv;
    write_compare_csv(csv, r1);
    CHECK(csv.str().find("trial,seed,k,bp_cost,exact_cost,ratio") == 0);
}
