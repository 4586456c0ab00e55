#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace m2o {

struct McConfig {
    double alpha = 2.0;
    int n = 100;
    int trials = 1;
    uint64_t seed = 1;
    std::string solver = "exact";  // brute | exact | bp
    int k_max = 50;                // bp only
    bool timing = false;           // real runtime_ms column (breaks bitwise reruns)
};

struct TrialRecord {
    int trial = 0;
    int n = 0;
    double alpha = 0.0;
    uint64_t seed = 0;
    std::string solver;
    int k = 0;
    double cost = 0.0;
    double cost_over_n = 0.0;
    double runtime_ms = 0.0;
    int uncovered_before_repair = 0;
};

struct McSummary {
    double mean_cost_over_n = 0.0;
    double stderr_cost_over_n = 0.0;
    double c_star_value = 0.0;
    double c_star_gap = 0.0;
};

std::vector<TrialRecord> run_mc(const McConfig& config, McSummary& summary);
void write_mc_csv(std::ostream& out, const std::vector<TrialRecord>& rows,
                  const McSummary& summary);

struct CompareConfig {
    double alpha = 2.0;
    int n = 100;
    int trials = 1;
    uint64_t seed = 1;
    std::vector<int> ks = {5, 10, 25, 50};
};

struct CompareRecord {
    int trial = 0;
    uint64_t seed = 0;
    int k = 0;
    double bp_cost = 0.0;
    double exact_cost = 0.0;
    double ratio = 0.0;
};

// Paired on identical instances: one exact solve per trial, BP decisions
// snapshotted at every requested iterate.
std::vector<CompareRecord> run_compare(const CompareConfig& config);
void write_compare_csv(std::ostream& out, const std::vector<CompareRecord>& rows);

}  // namespace m2o
