// Throughput comparison of the OpenMP kernels against their serial
// reference implementations, plus a consistency check that both produce
// identical bits.

#include <chrono>
#include <cstdio>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "m2o/bp.hpp"
#include "m2o/instance.hpp"
#include "m2o/popdyn.hpp"
#include "m2o/rde.hpp"

using namespace m2o;

namespace {

double seconds() {
    using namespace std::chrono;
    return duration<double>(steady_clock::now().time_since_epoch()).count();
}

template <typename F>
double time_best_of(int reps, F&& f) {
    double best = 1e300;
    for (int r = 0; r < reps; ++r) {
        double t0 = seconds();
        f();
        best = std::min(best, seconds() - t0);
    }
    return best;
}

}  // namespace

int main() {
#ifdef _OPENMP
    std::printf("openmp threads: %d\n", omp_get_max_threads());
#else
    std::printf("openmp: disabled at build time\n");
#endif

    {
        const int n = 1500;
        auto inst = gen_instance(n, 2.0, 42);
        MessageState a = bp_init(inst), b = bp_init(inst);
        MessageState sa = bp_init(inst), sb = bp_init(inst);
        double tp = time_best_of(3, [&] {
            for (int i = 0; i < 5; ++i) {
                bp_step(inst, a, b);
                std::swap(a, b);
            }
        });
        double ts = time_best_of(3, [&] {
            for (int i = 0; i < 5; ++i) {
                bp_step_serial(inst, sa, sb);
                std::swap(sa, sb);
            }
        });
        bool same = a.to_b == sa.to_b && a.to_a == sa.to_a;
        std::printf("bp_step      n=%d m=%d   serial %8.1f ms  parallel %8.1f ms  speedup %.2fx  bitwise %s\n",
                    inst.n, inst.m, 1e3 * ts / 5, 1e3 * tp / 5, ts / tp,
                    same ? "equal" : "DIFFER");
    }

    {
        const size_t N = 200000;
        const int P = 64;
        auto c = rde_constants(2.0);
        auto pool = pool_from_g(c, N, 7);
        TStepResult rp, rs;
        double tp = time_best_of(3, [&] { rp = t_step(pool, c, P, 99); });
        double ts = time_best_of(3, [&] { rs = t_step_serial(pool, c, P, 99); });
        bool same = rp.pool.samples == rs.pool.samples;
        std::printf("t_step       N=%zu P=%d  serial %8.1f ms  parallel %8.1f ms  speedup %.2fx  bitwise %s\n",
                    N, P, 1e3 * ts, 1e3 * tp, ts / tp, same ? "equal" : "DIFFER");
    }
    return 0;
}
