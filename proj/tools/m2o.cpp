// Command line front end: instance generation, solvers, Monte Carlo sweeps,
// fixed-point numerics, population dynamics, endogeny probe, PWIT runs.
// Everything prints CSV so downstream plotting stays external.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "m2o/bp.hpp"
#include "m2o/exact.hpp"
#include "m2o/experiments.hpp"
#include "m2o/instance.hpp"
#include "m2o/popdyn.hpp"
#include "m2o/pwit.hpp"
#include "m2o/rde.hpp"
#include "m2o/stats.hpp"

namespace {

std::unique_ptr<std::ofstream> file_out;
std::ostream* resolve_out(const std::string& path) {
    if (path.empty()) return &std::cout;
    file_out = std::make_unique<std::ofstream>(path);
    if (!*file_out) throw std::runtime_error("cannot open " + path);
    return file_out.get();
}

void print17(std::ostream& out, double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    out << buf;
}

m2o::BipartiteInstance acquire_instance(const std::string& in_path, int n, double alpha,
                                        uint64_t seed) {
    if (!in_path.empty()) return m2o::load_instance_file(in_path);
    return m2o::gen_instance(n, alpha, seed);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"minimum-weight many-to-one matching: solvers and experiments"};
    app.require_subcommand(1);

    double alpha = 2.0;
    int n = 100;
    int trials = 1;
    int k = 50;
    uint64_t seed = 1;
    std::string solver = "exact";
    std::string out_path;
    std::string in_path;
    size_t pool = 100000;
    int trunc = 64;
    int depth = 8;
    std::string root_label = "mix";
    std::string emit = "ks";
    std::vector<int> k_list;
    bool timing = false;

    auto* gen = app.add_subcommand("gen", "generate an instance file");
    gen->add_option("--n", n)->check(CLI::PositiveNumber);
    gen->add_option("--alpha", alpha);
    gen->add_option("--seed", seed);
    gen->add_option("--out", out_path);

    auto* solve = app.add_subcommand("solve", "exact solvers on one instance");
    solve->add_option("--in", in_path);
    solve->add_option("--n", n)->check(CLI::PositiveNumber);
    solve->add_option("--alpha", alpha);
    solve->add_option("--seed", seed);
    solve->add_option("--solver", solver)->check(CLI::IsMember({"brute", "exact"}));
    solve->add_option("--out", out_path);

    auto* bp = app.add_subcommand("bp", "belief propagation on one instance");
    bp->add_option("--in", in_path);
    bp->add_option("--n", n)->check(CLI::PositiveNumber);
    bp->add_option("--alpha", alpha);
    bp->add_option("--seed", seed);
    bp->add_option("--k", k)->check(CLI::PositiveNumber);
    bp->add_option("--out", out_path);

    auto* compare = app.add_subcommand("compare", "paired bp vs exact sweep");
    compare->add_option("--alpha", alpha);
    compare->add_option("--n", n)->check(CLI::PositiveNumber);
    compare->add_option("--trials", trials)->check(CLI::PositiveNumber);
    compare->add_option("--seed", seed);
    compare->add_option("--k", k_list, "bp iterate snapshots (repeatable)");
    compare->add_option("--out", out_path);

    auto* mc = app.add_subcommand("mc", "Monte Carlo sweep with one solver");
    mc->add_option("--alpha", alpha);
    mc->add_option("--n", n)->check(CLI::PositiveNumber);
    mc->add_option("--trials", trials)->check(CLI::PositiveNumber);
    mc->add_option("--seed", seed);
    mc->add_option("--solver", solver)->check(CLI::IsMember({"brute", "exact", "bp"}));
    mc->add_option("--k", k)->check(CLI::PositiveNumber);
    mc->add_flag("--timing", timing, "include real per-trial runtimes");
    mc->add_option("--out", out_path);

    auto* rde = app.add_subcommand("rde", "fixed point constants");
    rde->add_option("--alpha", alpha);
    rde->add_option("--out", out_path);

    auto* popdyn = app.add_subcommand("popdyn", "population dynamics of the m-side law");
    popdyn->add_option("--alpha", alpha);
    popdyn->add_option("--pool", pool)->check(CLI::PositiveNumber);
    popdyn->add_option("--trunc", trunc)->check(CLI::PositiveNumber);
    popdyn->add_option("--k", k, "generations")->check(CLI::PositiveNumber);
    popdyn->add_option("--seed", seed);
    std::string init = "G";
    popdyn->add_option("--init", init)->check(CLI::IsMember({"G", "exp1", "zero"}));
    popdyn->add_option("--out", out_path);

    auto* endo = app.add_subcommand("endogeny", "bivariate pool contraction probe");
    endo->add_option("--alpha", alpha);
    endo->add_option("--pool", pool)->check(CLI::PositiveNumber);
    endo->add_option("--trunc", trunc)->check(CLI::PositiveNumber);
    endo->add_option("--k", k, "generations")->check(CLI::PositiveNumber);
    endo->add_option("--seed", seed);
    endo->add_option("--out", out_path);

    auto* pwit = app.add_subcommand("pwit", "message marginals on truncated PWITs");
    pwit->add_option("--alpha", alpha);
    pwit->add_option("--k", k)->check(CLI::PositiveNumber);
    pwit->add_option("--depth", depth)->check(CLI::PositiveNumber);
    pwit->add_option("--trunc", trunc)->check(CLI::PositiveNumber);
    size_t trees = 10000;
    pwit->add_option("--trials,--trees", trees, "ensemble size")->check(CLI::PositiveNumber);
    pwit->add_option("--seed", seed);
    pwit->add_option("--root-label", root_label)->check(CLI::IsMember({"mix", "o", "m"}));
    pwit->add_option("--emit", emit)->check(CLI::IsMember({"ks", "samples"}));
    pwit->add_option("--out", out_path);

    CLI11_PARSE(app, argc, argv);

    try {
        std::ostream& out = *resolve_out(out_path);

        if (gen->parsed()) {
            m2o::dump_instance(m2o::gen_instance(n, alpha, seed), out);
        } else if (solve->parsed()) {
            auto inst = acquire_instance(in_path, n, alpha, seed);
            auto res = solver == "brute" ? m2o::brute_force(inst) : m2o::reduction_solve(inst);
            out << "solver,n,m,cost,cost_over_n\n" << solver << ',' << inst.n << ',' << inst.m << ',';
            print17(out, res.cost);
            out << ',';
            print17(out, res.cost / inst.n);
            out << '\n';
        } else if (bp->parsed()) {
            auto inst = acquire_instance(in_path, n, alpha, seed);
            auto res = m2o::bp_solve(inst, k);
            out << "k,sup_norm_delta_ab,sup_norm_delta_ba,uncovered_count\n";
            for (const auto& it : res.iterations) {
                out << it.k << ',';
                print17(out, it.delta_to_b);
                out << ',';
                print17(out, it.delta_to_a);
                out << ',' << it.uncovered << '\n';
            }
            out << "result,cost=";
            print17(out, res.cost);
            out << ",cost_over_n=";
            print17(out, res.cost / inst.n);
            out << ",uncovered_before_repair=" << res.uncovered_before_repair << '\n';
        } else if (compare->parsed()) {
            m2o::CompareConfig cfg;
            cfg.alpha = alpha;
            cfg.n = n;
            cfg.trials = trials;
            cfg.seed = seed;
            if (!k_list.empty()) cfg.ks = k_list;
            m2o::write_compare_csv(out, m2o::run_compare(cfg));
        } else if (mc->parsed()) {
            m2o::McConfig cfg;
            cfg.alpha = alpha;
            cfg.n = n;
            cfg.trials = trials;
            cfg.seed = seed;
            cfg.solver = solver;
            cfg.k_max = k;
            cfg.timing = timing;
            m2o::McSummary summary;
            auto rows = m2o::run_mc(cfg, summary);
            m2o::write_mc_csv(out, rows, summary);
        } else if (rde->parsed()) {
            auto c = m2o::rde_constants(alpha);
            out << "alpha,w_o,gamma,c_star,c_star_integral\n";
            print17(out, c.alpha);
            out << ',';
            print17(out, c.w_o);
            out << ',';
            print17(out, c.gamma);
            out << ',';
            print17(out, c.c_star);
            out << ',';
            print17(out, m2o::c_star_integral(alpha));
            out << '\n';
        } else if (popdyn->parsed()) {
            auto c = m2o::rde_constants(alpha);
            m2o::SamplePool p = init == "G"      ? m2o::pool_from_g(c, pool, seed)
                                : init == "exp1" ? m2o::pool_from_exp1(pool, seed)
                                                 : m2o::pool_zero(pool);
            auto ks_to_g = [&](const std::vector<double>& xs) {
                return m2o::ks_statistic(xs, [&](double t) { return m2o::G_cdf(c, t); },
                                         [&](double t) { return m2o::G_cdf_left(c, t); });
            };
            out << "generation,ks_to_G,trunc_used\n";
            out << "0,";
            print17(out, ks_to_g(p.samples));
            out << ",0\n";
            for (int g = 1; g <= k; ++g) {
                auto step = m2o::t_step(p, c, trunc, m2o::mix64(seed ^ static_cast<uint64_t>(g)));
                p = std::move(step.pool);
                out << g << ',';
                print17(out, ks_to_g(p.samples));
                out << ',' << step.safety.trunc_used << '\n';
            }
        } else if (endo->parsed()) {
            auto c = m2o::rde_constants(alpha);
            auto p = m2o::bivariate_init_independent(c, pool, seed);
            out << "generation,delta,delta_over_delta0\n";
            double d0 = m2o::pair_discrepancy(p);
            out << "0,";
            print17(out, d0);
            out << ",1\n";
            for (int g = 1; g <= k; ++g) {
                auto step = m2o::bivariate_step(p, c, trunc, m2o::mix64(seed ^ static_cast<uint64_t>(g)));
                p = std::move(step.pool);
                double d = m2o::pair_discrepancy(p);
                out << g << ',';
                print17(out, d);
                out << ',';
                print17(out, d / d0);
                out << '\n';
            }
        } else if (pwit->parsed()) {
            if (k > depth) throw std::runtime_error("pwit: need k <= depth");
            auto run = m2o::pwit_pooled_messages(alpha, k, trunc, trees, seed);
            if (emit == "ks") {
                out << "k,label,ks\n";
                for (const auto& row : run.rows) {
                    if (root_label != "o") {  // m root has o children
                        out << row.k << ",o,";
                        print17(out, row.ks_o);
                        out << '\n';
                    }
                    if (root_label != "m") {
                        out << row.k << ",m,";
                        print17(out, row.ks_m);
                        out << '\n';
                    }
                }
            } else {
                out << "label,message\n";
                if (root_label != "o")
                    for (double v : run.final_o) {
                        out << "o,";
                        print17(out, v);
                        out << '\n';
                    }
                if (root_label != "m")
                    for (double v : run.final_m) {
                        out << "m,";
                        print17(out, v);
                        out << '\n';
                    }
            }
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
