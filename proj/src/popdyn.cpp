#include "m2o/popdyn.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace m2o {

namespace {

inline double pos(double x) { return x > 0.0 ? x : 0.0; }

// One output sample of either half-step. alpha < 0 selects the m-side rule
// (positive part, unscaled process).
inline double one_sample(const std::vector<double>& pool, double alpha, int trunc,
                         uint64_t step_seed, size_t j, bool& high) {
    RngStream rs(step_seed, j);
    const size_t n = pool.size();
    double t = 0.0, best = 0.0;
    int arg = 0;
    for (int i = 0; i < trunc; ++i) {
        t += rs.next_exp();
        double x = pool[rs.next_below(n)];
        double v = alpha > 0.0 ? alpha * t - x : pos(t - x);
        if (i == 0 || v < best) {
            best = v;
            arg = i;
        }
    }
    high = arg >= trunc / 2;
    return best;
}

void half_step(const std::vector<double>& pool, double alpha, int trunc,
               uint64_t step_seed, std::vector<double>& out, double& high_frac,
               bool parallel) {
    if (pool.empty()) throw std::invalid_argument("empty pool");
    if (trunc < 16) throw std::invalid_argument("trunc must be >= 16");
    const size_t n = pool.size();
    out.resize(n);
    long high_count = 0;
    if (parallel) {
#pragma omp parallel for schedule(static) reduction(+ : high_count)
        for (long j = 0; j < static_cast<long>(n); ++j) {
            bool high = false;
            out[j] = one_sample(pool, alpha, trunc, step_seed, j, high);
            high_count += high;
        }
    } else {
        for (size_t j = 0; j < n; ++j) {
            bool high = false;
            out[j] = one_sample(pool, alpha, trunc, step_seed, j, high);
            high_count += high;
        }
    }
    high_frac = static_cast<double>(high_count) / static_cast<double>(n);
}

// Redo with doubled truncation until the argmin index check passes.
int safe_half_step(const std::vector<double>& pool, double alpha, int trunc,
                   uint64_t step_seed, std::vector<double>& out, StepSafety& safety,
                   bool parallel) {
    double high_frac = 0.0;
    for (;;) {
        half_step(pool, alpha, trunc, step_seed, out, high_frac, parallel);
        if (high_frac <= kHighArgminTol || trunc >= kMaxTrunc) break;
        trunc *= 2;
        ++safety.times_doubled;
    }
    safety.trunc_used = std::max(safety.trunc_used, trunc);
    safety.high_argmin_frac = std::max(safety.high_argmin_frac, high_frac);
    return trunc;
}

TStepResult t_step_impl(const SamplePool& pool_m, const RdeConstants& c, int trunc,
                        uint64_t seed, bool parallel) {
    if (pool_m.side != 'm') throw std::invalid_argument("t_step wants an m-side pool");
    TStepResult res;
    uint64_t phi_seed = mix64(seed ^ 0x706869ULL);
    uint64_t gamma_seed = mix64(seed ^ 0x67616d6dULL);
    std::vector<double> o_pool;
    safe_half_step(pool_m.samples, c.alpha, trunc, phi_seed, o_pool, res.safety, parallel);
    safe_half_step(o_pool, -1.0, trunc, gamma_seed, res.pool.samples, res.safety, parallel);
    res.pool.generation = pool_m.generation + 1;
    res.pool.side = 'm';
    return res;
}

}  // namespace

void phi_half_step(const std::vector<double>& m_pool, double alpha, int trunc,
                   uint64_t step_seed, std::vector<double>& out, double& high_frac,
                   bool parallel) {
    half_step(m_pool, alpha, trunc, step_seed, out, high_frac, parallel);
}

void gamma_half_step(const std::vector<double>& o_pool, int trunc, uint64_t step_seed,
                     std::vector<double>& out, double& high_frac, bool parallel) {
    half_step(o_pool, -1.0, trunc, step_seed, out, high_frac, parallel);
}

TStepResult t_step(const SamplePool& pool_m, const RdeConstants& c, int trunc,
                   uint64_t seed) {
    return t_step_impl(pool_m, c, trunc, seed, true);
}

TStepResult t_step_serial(const SamplePool& pool_m, const RdeConstants& c, int trunc,
                          uint64_t seed) {
    return t_step_impl(pool_m, c, trunc, seed, false);
}

SamplePool pool_from_g(const RdeConstants& c, size_t n, uint64_t seed) {
    SamplePool p;
    p.side = 'm';
    p.samples.resize(n);
    RngStream rs(seed, stream::pool);
    for (double& x : p.samples) x = sample_G(c, rs);
    return p;
}

SamplePool pool_from_exp1(size_t n, uint64_t seed) {
    SamplePool p;
    p.side = 'm';
    p.samples.resize(n);
    RngStream rs(seed, stream::pool);
    for (double& x : p.samples) x = rs.next_exp();
    return p;
}

SamplePool pool_zero(size_t n) {
    SamplePool p;
    p.side = 'm';
    p.samples.assign(n, 0.0);
    return p;
}

BivariatePool bivariate_init_independent(const RdeConstants& c, size_t n, uint64_t seed) {
    BivariatePool p;
    p.first.resize(n);
    p.second.resize(n);
    RngStream rs(seed, stream::pool);
    for (size_t i = 0; i < n; ++i) {
        p.first[i] = sample_F(c, rs);
        p.second[i] = sample_F(c, rs);
    }
    return p;
}

namespace {

// Shared-innovation pair update; the two coordinates see identical xi and
// identical pool indices, so equal inputs stay equal forever.
void bivariate_half(const std::vector<double>& in1, const std::vector<double>& in2,
                    double alpha, int trunc, uint64_t step_seed,
                    std::vector<double>& out1, std::vector<double>& out2,
                    double& high_frac) {
    const size_t n = in1.size();
    out1.resize(n);
    out2.resize(n);
    long high_count = 0;
#pragma omp parallel for schedule(static) reduction(+ : high_count)
    for (long j = 0; j < static_cast<long>(n); ++j) {
        RngStream rs(step_seed, static_cast<uint64_t>(j));
        double t = 0.0, b1 = 0.0, b2 = 0.0;
        int a1 = 0, a2 = 0;
        for (int i = 0; i < trunc; ++i) {
            t += rs.next_exp();
            uint64_t u = rs.next_below(n);
            double v1, v2;
            if (alpha > 0.0) {
                v1 = alpha * t - in1[u];
                v2 = alpha * t - in2[u];
            } else {
                v1 = pos(t - in1[u]);
                v2 = pos(t - in2[u]);
            }
            if (i == 0 || v1 < b1) {
                b1 = v1;
                a1 = i;
            }
            if (i == 0 || v2 < b2) {
                b2 = v2;
                a2 = i;
            }
        }
        out1[j] = b1;
        out2[j] = b2;
        high_count += (a1 >= trunc / 2) || (a2 >= trunc / 2);
    }
    high_frac = static_cast<double>(high_count) / static_cast<double>(n);
}

}  // namespace

BivariateStepResult bivariate_step(const BivariatePool& pool, const RdeConstants& c,
                                   int trunc, uint64_t seed) {
    if (pool.first.size() != pool.second.size() || pool.first.empty())
        throw std::invalid_argument("bad bivariate pool");
    if (trunc < 16) throw std::invalid_argument("trunc must be >= 16");
    BivariateStepResult res;
    std::vector<double> m1, m2;
    for (int half = 0; half < 2; ++half) {
        uint64_t step_seed = mix64(seed ^ (half ? 0x6f70ULL : 0x6d70ULL));
        double high_frac = 0.0;
        int p = trunc;
        for (;;) {
            if (half == 0)
                bivariate_half(pool.first, pool.second, -1.0, p, step_seed, m1, m2, high_frac);
            else
                bivariate_half(m1, m2, c.alpha, p, step_seed, res.pool.first,
                               res.pool.second, high_frac);
            if (high_frac <= kHighArgminTol || p >= kMaxTrunc) break;
            p *= 2;
            ++res.safety.times_doubled;
        }
        res.safety.trunc_used = std::max(res.safety.trunc_used, p);
        res.safety.high_argmin_frac = std::max(res.safety.high_argmin_frac, high_frac);
    }
    res.pool.generation = pool.generation + 1;
    return res;
}

double pair_discrepancy(const BivariatePool& pool) {
    double s = 0.0;
    for (size_t i = 0; i < pool.first.size(); ++i)
        s += std::fabs(pool.first[i] - pool.second[i]);
    return s / static_cast<double>(pool.first.size());
}

std::vector<double> grid_t_step(const std::vector<double>& g, double alpha, double t_max) {
    const size_t n = g.size();
    const double h = t_max / static_cast<double>(n - 1);
    // I0 = int_0^inf G, J(u) = int_u^inf G by trapezoid with zero tail
    std::vector<double> suffix(n, 0.0);
    for (size_t i = n - 1; i-- > 0;)
        suffix[i] = suffix[i + 1] + 0.5 * h * (g[i] + g[i + 1]);
    const double i0 = suffix[0];
    // F0(-u) = exp(-J(u)/alpha); prefix integral of it gives Gamma's argument
    std::vector<double> out(n);
    double prefix = 0.0;
    double tail = alpha * std::exp(-i0 / alpha);  // int_0^inf F0
    double prev = std::exp(-suffix[0] / alpha);
    out[0] = std::exp(-(prefix + tail));
    for (size_t i = 1; i < n; ++i) {
        double cur = std::exp(-suffix[i] / alpha);
        prefix += 0.5 * h * (prev + cur);
        prev = cur;
        out[i] = std::exp(-(prefix + tail));
    }
    return out;
}

std::vector<double> grid_fixed_point(double alpha, double t_max, int points, int iters) {
    std::vector<double> g(points);
    const double h = t_max / static_cast<double>(points - 1);
    for (int i = 0; i < points; ++i) g[i] = std::exp(-h * static_cast<double>(i));
    for (int it = 0; it < iters; ++it) g = grid_t_step(g, alpha, t_max);
    return g;
}

}  // namespace m2o
