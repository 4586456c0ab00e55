#include "m2o/experiments.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>

#include "m2o/bp.hpp"
#include "m2o/exact.hpp"
#include "m2o/instance.hpp"
#include "m2o/rde.hpp"
#include "m2o/rng.hpp"
#include "m2o/stats.hpp"

namespace m2o {

namespace {

double now_ms() {
    using namespace std::chrono;
    return duration<double, std::milli>(steady_clock::now().time_since_epoch()).count();
}

void fmt17(std::ostream& out, double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    out << buf;
}

}  // namespace

std::vector<TrialRecord> run_mc(const McConfig& config, McSummary& summary) {
    if (config.trials < 1 || config.n < 1) throw std::invalid_argument("bad mc config");
    if (config.solver != "brute" && config.solver != "exact" && config.solver != "bp")
        throw std::invalid_argument("unknown solver: " + config.solver);

    std::vector<TrialRecord> rows(config.trials);
    std::string first_error;
#pragma omp parallel for schedule(dynamic)
    for (int t = 0; t < config.trials; ++t) {
        try {
            uint64_t s = trial_seed(config.seed, static_cast<uint64_t>(t));
            BipartiteInstance inst = gen_instance(config.n, config.alpha, s);
            TrialRecord rec;
            rec.trial = t;
            rec.n = inst.n;
            rec.alpha = config.alpha;
            rec.seed = s;
            rec.solver = config.solver;
            double t0 = now_ms();
            if (config.solver == "brute") {
                rec.cost = brute_force(inst).cost;
            } else if (config.solver == "exact") {
                rec.cost = reduction_solve(inst).cost;
            } else {
                BpResult bp = bp_solve(inst, config.k_max, /*collect_stats=*/false);
                rec.cost = bp.cost;
                rec.k = config.k_max;
                rec.uncovered_before_repair = bp.uncovered_before_repair;
            }
            if (config.timing) rec.runtime_ms = now_ms() - t0;
            rec.cost_over_n = rec.cost / rec.n;
            rows[t] = std::move(rec);
        } catch (const std::exception& e) {
#pragma omp critical
            if (first_error.empty()) first_error = e.what();
        }
    }
    if (!first_error.empty()) throw std::runtime_error("mc trial failed: " + first_error);

    std::vector<double> per_n;
    per_n.reserve(rows.size());
    for (const auto& r : rows) per_n.push_back(r.cost_over_n);
    summary.mean_cost_over_n = mean(per_n);
    summary.stderr_cost_over_n = stderr_of_mean(per_n);
    summary.c_star_value = c_star(config.alpha);
    summary.c_star_gap = std::fabs(summary.mean_cost_over_n - summary.c_star_value);
    return rows;
}

void write_mc_csv(std::ostream& out, const std::vector<TrialRecord>& rows,
                  const McSummary& summary) {
    out << "trial,n,alpha,seed,solver,k,cost,cost_over_n,runtime_ms,uncovered_before_repair\n";
    for (const auto& r : rows) {
        out << r.trial << ',' << r.n << ',';
        fmt17(out, r.alpha);
        out << ',' << r.seed << ',' << r.solver << ',' << r.k << ',';
        fmt17(out, r.cost);
        out << ',';
        fmt17(out, r.cost_over_n);
        out << ',';
        fmt17(out, r.runtime_ms);
        out << ',' << r.uncovered_before_repair << '\n';
    }
    out << "summary,mean_cost_over_n=";
    fmt17(out, summary.mean_cost_over_n);
    out << ",stderr=";
    fmt17(out, summary.stderr_cost_over_n);
    out << ",c_star=";
    fmt17(out, summary.c_star_value);
    out << ",abs_gap=";
    fmt17(out, summary.c_star_gap);
    out << '\n';
}

std::vector<CompareRecord> run_compare(const CompareConfig& config) {
    if (config.trials < 1 || config.ks.empty()) throw std::invalid_argument("bad compare config");
    std::vector<int> ks = config.ks;
    std::sort(ks.begin(), ks.end());
    if (ks.front() < 1) throw std::invalid_argument("k must be >= 1");
    const int k_last = ks.back();

    std::vector<std::vector<CompareRecord>> per_trial(config.trials);
    std::string first_error;
#pragma omp parallel for schedule(dynamic)
    for (int t = 0; t < config.trials; ++t) {
        try {
            uint64_t s = trial_seed(config.seed, static_cast<uint64_t>(t));
            BipartiteInstance inst = gen_instance(config.n, config.alpha, s);
            double exact_cost = reduction_solve(inst).cost;

            MessageState cur = bp_init(inst), next = bp_init(inst);
            size_t mark = 0;
            for (int k = 1; k <= k_last; ++k) {
                bp_step(inst, cur, next);
                std::swap(cur, next);
                if (mark < ks.size() && ks[mark] == k) {
                    ManyToOneMatching match = bp_repair(inst, bp_decide(inst, cur));
                    CompareRecord rec;
                    rec.trial = t;
                    rec.seed = s;
                    rec.k = k;
                    rec.bp_cost = matching_cost(inst, match);
                    rec.exact_cost = exact_cost;
                    rec.ratio = rec.bp_cost / exact_cost;
                    per_trial[t].push_back(rec);
                    ++mark;
                }
            }
        } catch (const std::exception& e) {
#pragma omp critical
            if (first_error.empty()) first_error = e.what();
        }
    }
    if (!first_error.empty()) throw std::runtime_error("compare trial failed: " + first_error);

    std::vector<CompareRecord> rows;
    for (auto& tr : per_trial)
        for (auto& r : tr) rows.push_back(std::move(r));
    return rows;
}

void write_compare_csv(std::ostream& out, const std::vector<CompareRecord>& rows) {
    out << "trial,seed,k,bp_cost,exact_cost,ratio\n";
    for (const auto& r : rows) {
        out << r.trial << ',' << r.seed << ',' << r.k << ',';
        fmt17(out, r.bp_cost);
        out << ',';
        fmt17(out, r.exact_cost);
        out << ',';
        fmt17(out, r.ratio);
        out << '\n';
    }
}

}  // namespace m2o
