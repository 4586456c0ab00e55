#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <set>
#include <sstream>

#include "m2o/instance.hpp"
#include "m2o/rng.hpp"

using namespace m2o;

TEST_CASE("rng streams are deterministic and distinct") {
    RngStream a(42, 7), b(42, 7), c(42, 8);
    for (int i = 0; i < 100; ++i) {
        uint64_t x = a.next_u64();
        CHECK(x == b.next_u64());
        CHECK(x != c.next_u64());
    }
    RngStream u(1);
    for (int i = 0; i < 1000; ++i) {
        double v = u.next_unit();
        CHECK(v > 0.0);
        CHECK(v < 1.0);
        CHECK(u.next_exp(3.0) >= 0.0);
    }
}

TEST_CASE("many_side_count ceiling arithmetic") {
    CHECK(many_side_count(4, 2.0) == 2);
    CHECK(many_side_count(5, 2.0) == 3);
    CHECK(many_side_count(10, 2.0) == 5);
    CHECK(many_side_count(1, 2.0) == 1);
    CHECK(many_side_count(7, 1.75) == 4);
    CHECK(many_side_count(5, 1.0 + 1e-12) == 5);
    CHECK(many_side_count(1000000, 2.0) == 500000);
    CHECK_THROWS(many_side_count(3, 1.0));
    CHECK_THROWS(many_side_count(3, 0.5));
}

TEST_CASE("gen_instance shape and determinism") {
    auto inst = gen_instance(4, 2.0, 99);
    CHECK(inst.m == 2);
    CHECK(inst.weights.size() == 8);
    for (double w : inst.weights) CHECK(w > 0.0);

    CHECK(gen_instance(5, 2.0, 99).m == 3);

    auto again = gen_instance(4, 2.0, 99);
    CHECK(inst.weights == again.weights);
    auto other = gen_instance(4, 2.0, 100);
    CHECK(inst.weights != other.weights);
}

TEST_CASE("gen_instance weight law has mean n") {
    const int n = 10000;
    auto inst = gen_instance(n, 2.0, 7);
    double s = 0.0;
    for (double w : inst.weights) s += w;
    double m = s / static_cast<double>(inst.weights.size());
    CHECK(std::fabs(m - n) < 0.03 * n);
}

TEST_CASE("matching_cost examples and naive oracle") {
    BipartiteInstance inst;
    inst.n = 2;
    inst.m = 1;
    inst.alpha = 2.0;
    inst.weights = {3.0, 4.0};
    auto match = make_matching({0, 0}, 1);
    CHECK(matching_cost(inst, match) == doctest::Approx(7.0));

    BipartiteInstance zero;
    zero.n = 3;
    zero.m = 2;
    zero.alpha = 1.5;
    zero.weights.assign(6, 0.0);
    CHECK(matching_cost(zero, make_matching({0, 1, 0}, 2)) == 0.0);

    // independent recomputation by a naive loop
    auto rnd = gen_instance(9, 2.5, 3);
    RngStream rs(5);
    std::vector<int> assign(rnd.n);
    for (int a = 0; a < rnd.n; ++a) assign[a] = static_cast<int>(rs.next_below(rnd.m));
    auto m2 = make_matching(assign, rnd.m);
    double naive = 0.0;
    for (int a = 0; a < rnd.n; ++a) naive += rnd.weights[a * rnd.m + assign[a]];
    CHECK(matching_cost(rnd, m2) == naive);

    CHECK_THROWS(matching_cost(rnd, make_matching({0}, rnd.m)));
}

TEST_CASE("matching_cost is linear in the weights") {
    auto inst = gen_instance(7, 1.8, 11);
    auto scaled = inst;
    for (double& w : scaled.weights) w *= 2.5;
    auto match = make_matching({0, 1, 2, 3, 0, 1, 2}, inst.m);
    CHECK(matching_cost(scaled, match) ==
          doctest::Approx(2.5 * matching_cost(inst, match)).epsilon(1e-12));
}

TEST_CASE("is_feasible equals onto-ness") {
    BipartiteInstance inst;
    inst.n = 2;
    inst.m = 2;
    inst.alpha = 1.5;
    inst.weights.assign(4, 1.0);
    CHECK_FALSE(is_feasible(inst, make_matching({0, 0}, 2)));
    CHECK(is_feasible(inst, make_matching({0, 1}, 2)));

    BipartiteInstance inst32;
    inst32.n = 3;
    inst32.m = 2;
    inst32.alpha = 1.5;
    inst32.weights.assign(6, 1.0);
    CHECK(is_feasible(inst32, make_matching({1, 1, 0}, 2)));

    // set-based oracle on random assignments
    RngStream rs(17);
    auto rnd = gen_instance(6, 2.0, 1);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<int> assign(rnd.n);
        for (int a = 0; a < rnd.n; ++a) assign[a] = static_cast<int>(rs.next_below(rnd.m));
        std::set<int> image(assign.begin(), assign.end());
        bool onto = static_cast<int>(image.size()) == rnd.m;
        CHECK(is_feasible(rnd, make_matching(assign, rnd.m)) == onto);
    }
}

TEST_CASE("instance dump/load round trip is bit exact") {
    auto inst = gen_instance(9, 2.7, 123456789);
    std::stringstream ss;
    dump_instance(inst, ss);
    auto back = load_instance(ss);
    CHECK(back.n == inst.n);
    CHECK(back.m == inst.m);
    CHECK(back.alpha == inst.alpha);
    CHECK(back.seed == inst.seed);
    CHECK(back.weights == inst.weights);
}

TEST_CASE("load rejects malformed input") {
    std::stringstream bad1("3 2");
    CHECK_THROWS(load_instance(bad1));
    std::stringstream bad2("2 1 2.0 5\n1.0\n-3.0\n");
    CHECK_THROWS(load_instance(bad2));
    std::stringstream bad3("2 3 2.0 5\n1 1 1\n1 1 1\n");  // m > n
    CHECK_THROWS(load_instance(bad3));
}
