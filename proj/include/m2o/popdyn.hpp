#pragma once

#include <cstdint>
#include <vector>

#include "m2o/rde.hpp"

namespace m2o {

// Empirical distribution of one side of the fixed point, evolved sample-wise.
struct SamplePool {
    std::vector<double> samples;
    int generation = 0;
    char side = 'm';
};

// Truncation bookkeeping: each output draws the first P points of a rate-1
// Poisson process; the realized argmin index must sit below P/2 in at least
// 99.9% of samples, otherwise the step is redone with P doubled.
struct StepSafety {
    int trunc_used = 0;
    int times_doubled = 0;
    double high_argmin_frac = 0.0;
};

inline constexpr int kMaxTrunc = 1024;
inline constexpr double kHighArgminTol = 1e-3;

// o-side update: out[j] = min_i (alpha xi_i - pool[u_i]).
void phi_half_step(const std::vector<double>& m_pool, double alpha, int trunc,
                   uint64_t step_seed, std::vector<double>& out, double& high_frac,
                   bool parallel = true);
// m-side update: out[j] = min_i (xi_i - pool[u_i])^+.
void gamma_half_step(const std::vector<double>& o_pool, int trunc, uint64_t step_seed,
                     std::vector<double>& out, double& high_frac, bool parallel = true);

// Full two-step update of an m-side pool (o-side pool materialized in
// between), with the truncation safety check applied to both halves.
struct TStepResult {
    SamplePool pool;
    StepSafety safety;
};
TStepResult t_step(const SamplePool& pool_m, const RdeConstants& c, int trunc,
                   uint64_t seed);
TStepResult t_step_serial(const SamplePool& pool_m, const RdeConstants& c, int trunc,
                          uint64_t seed);

SamplePool pool_from_g(const RdeConstants& c, size_t n, uint64_t seed);
SamplePool pool_from_exp1(size_t n, uint64_t seed);
SamplePool pool_zero(size_t n);

// Paired pool for the bivariate recursion: both coordinates are updated with
// the same Poisson points and the same pool indices; only the inherited
// sample values differ.
struct BivariatePool {
    std::vector<double> first, second;
    int generation = 0;
};

BivariatePool bivariate_init_independent(const RdeConstants& c, size_t n, uint64_t seed);

struct BivariateStepResult {
    BivariatePool pool;
    StepSafety safety;
};
// One generation: m-side pairs from the o-side pairs, then o-side pairs back.
BivariateStepResult bivariate_step(const BivariatePool& pool, const RdeConstants& c,
                                   int trunc, uint64_t seed);

// mean |X1 - X2| over the pair pool
double pair_discrepancy(const BivariatePool& pool);

// Deterministic low-resolution cross-check: iterate the m-side cdf operator
// on a uniform grid over [0, t_max] (complementary cdf values; 1 below 0).
std::vector<double> grid_t_step(const std::vector<double>& g, double alpha, double t_max);
std::vector<double> grid_fixed_point(double alpha, double t_max, int points, int iters);

}  // namespace m2o
