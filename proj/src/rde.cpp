#include "m2o/rde.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "m2o/quadrature.hpp"

namespace m2o {

double solve_wo(double alpha) {
    if (!(alpha > 1.0)) throw std::invalid_argument("solve_wo: alpha must be > 1");
    // root of h(w) = w + expm1(-w) - (alpha-1) on [0, alpha]
    auto h = [&](double w) { return w + std::expm1(-w) - (alpha - 1.0); };
    double lo = 0.0, hi = alpha;
    double w = alpha - 1.0;
    for (int it = 0; it < 200; ++it) {
        double hw = h(w);
        if (std::fabs(hw) < 1e-15) break;
        (hw < 0.0 ? lo : hi) = w;
        double dh = -std::expm1(-w);  // 1 - e^{-w}
        double step = dh > 0.0 ? w - hw / dh : lo;
        w = (step > lo && step < hi) ? step : 0.5 * (lo + hi);
        if (hi - lo < 1e-16 * alpha) break;
    }
    return w;
}

namespace {

// power series sum_{k>=1} x^k / k^2, |x| <= 0.5
double dilog_series(double x) {
    double term = x, sum = x;
    for (int k = 2; k < 80; ++k) {
        term *= x;
        double add = term / (static_cast<double>(k) * k);
        sum += add;
        if (std::fabs(add) < 1e-18) break;
    }
    return sum;
}

}  // namespace

double dilog(double z) {
    constexpr double pi2_6 = std::numbers::pi * std::numbers::pi / 6.0;
    if (z > 0.0) throw std::invalid_argument("dilog: z must be <= 0");
    if (z == 0.0) return 0.0;
    if (z < -1.0) {
        // inversion: Li2(z) = -Li2(1/z) - pi^2/6 - ln^2(-z)/2
        double l = std::log(-z);
        return -dilog(1.0 / z) - pi2_6 - 0.5 * l * l;
    }
    if (z < -0.5) {
        // Landen: Li2(z) = -Li2(z/(z-1)) - ln^2(1-z)/2, argument lands in (1/3, 1/2]
        double l = std::log1p(-z);
        return -dilog_series(z / (z - 1.0)) - 0.5 * l * l;
    }
    return dilog_series(z);
}

RdeConstants rde_constants(double alpha) {
    RdeConstants c;
    c.alpha = alpha;
    c.w_o = solve_wo(alpha);
    c.gamma = c.w_o * std::exp(c.w_o);
    double lg = std::log1p(1.0 / c.gamma);
    c.c_star = -dilog(-1.0 / c.gamma) - 0.5 * lg * lg + c.w_o * lg + c.w_o;
    return c;
}

double c_star(double alpha) { return rde_constants(alpha).c_star; }

double F_eval(const RdeConstants& c, double t) {
    if (t >= 0.0) return c.w_o / c.alpha * std::exp(-t / c.alpha);
    return c.gamma / (std::exp(t) + c.gamma);
}

double G_eval(const RdeConstants& c, double t) {
    if (t < 0.0) return 1.0;
    double e = std::exp(-t);
    return c.alpha * e / (e + c.gamma);
}

double f_eval(const RdeConstants& c, double t) {
    if (t > 0.0) return c.w_o / (c.alpha * c.alpha) * std::exp(-t / c.alpha);
    double e = std::exp(t);
    double d = e + c.gamma;
    return c.gamma * e / (d * d);
}

double w_m(const RdeConstants& c) { return -c.alpha * std::log(c.w_o / c.alpha); }

double sample_F(const RdeConstants& c, RngStream& rng) {
    double u = rng.next_unit();
    double split = c.w_o / c.alpha;  // F(0)
    if (u <= split) return -c.alpha * std::log(c.alpha * u / c.w_o);
    return std::log(c.gamma * (1.0 - u) / u);
}

double sample_G(const RdeConstants& c, RngStream& rng) {
    double u = rng.next_unit();
    double g0 = c.alpha / (1.0 + c.gamma);  // G(0) = alpha - w_o
    if (u >= g0) return 0.0;                // atom at zero
    return std::log((c.alpha - u) / (c.gamma * u));
}

double c_star_integral(double alpha, double abs_tol) {
    const RdeConstants c = rde_constants(alpha);

    // z-range: truncate where int_Z^inf z (F(z/2) + G(z/2)) / alpha dz drops
    // below a tenth of the budget. G(t) <= (alpha/gamma) e^{-t}.
    auto z_tail_bound = [&](double Z) {
        double s = 2.0 * alpha;
        double from_f = (c.w_o / (alpha * alpha)) * s * (Z + s) * std::exp(-Z / s);
        double from_g = (2.0 / c.gamma) * (Z + 2.0) * std::exp(-0.5 * Z);
        return from_f + from_g;
    };
    double Z = 8.0 * alpha;
    while (z_tail_bound(Z) > 0.1 * abs_tol) Z *= 1.5;

    // x-range: below x_lo the inner integrand is at most alpha e^{x}/gamma.
    double x_lo = std::log(0.1 * abs_tol * c.gamma / (0.5 * Z * Z * alpha)) - 5.0;
    if (x_lo > -10.0) x_lo = -10.0;

    const double inner_tol = 0.4 * abs_tol * alpha / (0.5 * Z * Z);
    bool inner_ok = true;
    double inner_err = 0.0;

    auto p_of_z = [&](double z) {
        auto integrand = [&](double x) { return G_eval(c, z - x) * f_eval(c, x); };
        QuadResult left = adaptive_quad(integrand, x_lo, 0.0, 0.5 * inner_tol);
        QuadResult right = z > 0.0 ? adaptive_quad(integrand, 0.0, z, 0.5 * inner_tol)
                                   : QuadResult{};
        if (!left.converged || !right.converged) inner_ok = false;
        inner_err = std::max(inner_err, left.error + right.error);
        return left.value + right.value + F_eval(c, z);  // x > z: G = 1 exactly
    };

    QuadResult outer = adaptive_quad([&](double z) { return z * p_of_z(z) / alpha; },
                                     0.0, Z, 0.5 * abs_tol);
    if (!outer.converged || !inner_ok)
        throw std::runtime_error("c_star_integral: quadrature did not converge, error ~" +
                                 std::to_string(outer.error + inner_err));
    return outer.value;
}

}  // namespace m2o
