#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <vector>

namespace m2o {

// One-sample Kolmogorov-Smirnov statistic sup_x |F_n(x) - F(x)|.
// cdf must be right-continuous; for laws with atoms pass cdf_left
// (t -> P(X < t)) as well, otherwise the jump itself would be counted as
// discrepancy.
inline double ks_statistic(std::vector<double> samples,
                           const std::function<double(double)>& cdf,
                           const std::function<double(double)>& cdf_left = nullptr) {
    std::sort(samples.begin(), samples.end());
    const double n = static_cast<double>(samples.size());
    double d = 0.0;
    size_t lo = 0;
    while (lo < samples.size()) {
        size_t hi = lo;
        while (hi < samples.size() && samples[hi] == samples[lo]) ++hi;
        double v = samples[lo];
        d = std::max(d, std::fabs(cdf(v) - static_cast<double>(hi) / n));
        double left = cdf_left ? cdf_left(v) : cdf(v);
        d = std::max(d, std::fabs(left - static_cast<double>(lo) / n));
        lo = hi;
    }
    return d;
}

inline double mean(const std::vector<double>& xs) {
    double s = 0.0;
    for (double x : xs) s += x;
    return s / static_cast<double>(xs.size());
}

inline double stderr_of_mean(const std::vector<double>& xs) {
    double m = mean(xs), s2 = 0.0;
    for (double x : xs) s2 += (x - m) * (x - m);
    size_t n = xs.size();
    return n > 1 ? std::sqrt(s2 / (static_cast<double>(n - 1) * n)) : 0.0;
}

}  // namespace m2o
