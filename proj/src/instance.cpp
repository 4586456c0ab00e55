#include "m2o/instance.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace m2o {

ManyToOneMatching make_matching(std::vector<int> assign, int m) {
    ManyToOneMatching match;
    match.assign = std::move(assign);
    match.bdegree.assign(m, 0);
    for (int b : match.assign) {
        if (b < 0 || b >= m) throw std::invalid_argument("assign value out of range");
        ++match.bdegree[b];
    }
    return match;
}

int many_side_count(int n, double alpha) {
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    if (!(alpha > 1.0)) throw std::invalid_argument("alpha must be > 1");
    int m = static_cast<int>(std::ceil(static_cast<double>(n) / alpha));
    // m = smallest integer with m*alpha >= n
    while (static_cast<double>(m) * alpha < static_cast<double>(n)) ++m;
    while (m > 1 && static_cast<double>(m - 1) * alpha >= static_cast<double>(n)) --m;
    return m;
}

static double exp_mean_n(RngStream& rng, int n) { return rng.next_exp(static_cast<double>(n)); }

BipartiteInstance gen_instance(int n, double alpha, uint64_t seed) {
    return gen_instance(n, alpha, seed, &exp_mean_n);
}

BipartiteInstance gen_instance(int n, double alpha, uint64_t seed, WeightSampler sampler) {
    BipartiteInstance inst;
    inst.n = n;
    inst.m = many_side_count(n, alpha);
    inst.alpha = alpha;
    inst.seed = seed;
    inst.weights.resize(static_cast<size_t>(n) * inst.m);
    RngStream rng(seed, stream::weights);
    for (double& w : inst.weights) w = sampler(rng, n);
    return inst;
}

double matching_cost(const BipartiteInstance& inst, const ManyToOneMatching& match) {
    if (static_cast<int>(match.assign.size()) != inst.n)
        throw std::invalid_argument("matching size does not match instance");
    double cost = 0.0;
    for (int a = 0; a < inst.n; ++a) {
        int b = match.assign[a];
        if (b < 0 || b >= inst.m) throw std::invalid_argument("assign value out of range");
        cost += inst.w(a, b);
    }
    return cost;
}

bool is_feasible(const BipartiteInstance& inst, const ManyToOneMatching& match) {
    if (static_cast<int>(match.assign.size()) != inst.n ||
        static_cast<int>(match.bdegree.size()) != inst.m)
        throw std::invalid_argument("matching size does not match instance");
    std::vector<int> degree(inst.m, 0);
    for (int b : match.assign) {
        if (b < 0 || b >= inst.m) return false;
        ++degree[b];
    }
    if (degree != match.bdegree) return false;
    for (int d : degree)
        if (d < 1) return false;
    return true;
}

void dump_instance(const BipartiteInstance& inst, std::ostream& out) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", inst.alpha);
    out << inst.n << ' ' << inst.m << ' ' << buf << ' ' << inst.seed << '\n';
    for (int a = 0; a < inst.n; ++a) {
        for (int b = 0; b < inst.m; ++b) {
            std::snprintf(buf, sizeof(buf), "%.17g", inst.w(a, b));
            out << buf << (b + 1 == inst.m ? '\n' : ' ');
        }
    }
}

BipartiteInstance load_instance(std::istream& in) {
    BipartiteInstance inst;
    if (!(in >> inst.n >> inst.m >> inst.alpha >> inst.seed))
        throw std::runtime_error("bad instance header");
    if (inst.n < 1 || inst.m < 1 || inst.m > inst.n)
        throw std::runtime_error("bad instance dimensions");
    inst.weights.resize(static_cast<size_t>(inst.n) * inst.m);
    for (double& w : inst.weights) {
        if (!(in >> w)) throw std::runtime_error("truncated instance weights");
        if (!(w >= 0.0) || !std::isfinite(w)) throw std::runtime_error("bad weight value");
    }
    return inst;
}

void save_instance_file(const BipartiteInstance& inst, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    dump_instance(inst, out);
}

BipartiteInstance load_instance_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return load_instance(in);
}

}  // namespace m2o
