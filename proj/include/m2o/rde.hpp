#pragma once

#include "m2o/rng.hpp"

namespace m2o {

// Fixed-point constants of the two-step recursive distributional equation:
// w_o solves alpha = w + e^{-w}, gamma = w_o e^{w_o}, c_star is the limiting
// expected minimum matching cost per one-side vertex.
struct RdeConstants {
    double alpha = 0.0;
    double w_o = 0.0;
    double gamma = 0.0;
    double c_star = 0.0;
};

// Unique positive root of w + e^{-w} = alpha, |residual| < 1e-13. alpha > 1.
double solve_wo(double alpha);

// Dilogarithm Li2(z) for z <= 0: power series near 0, Landen's identity on
// (-1, -0.5), the inversion identity below -1.
double dilog(double z);

RdeConstants rde_constants(double alpha);

double c_star(double alpha);

// Independent evaluation of the same constant as a double integral of
// z G(z-x) f(x) / alpha over z >= 0, x in R, with analytic tails.
double c_star_integral(double alpha, double abs_tol = 1e-9);

// Complementary cdfs of the fixed point: F for the o-side (support R),
// G for the m-side (support R+, atom at 0), f the o-side density.
double F_eval(const RdeConstants& c, double t);
double G_eval(const RdeConstants& c, double t);
double f_eval(const RdeConstants& c, double t);

// cdf views for distribution tests. G has an atom at zero, so its left
// limit differs there.
inline double F_cdf(const RdeConstants& c, double t) { return 1.0 - F_eval(c, t); }
inline double G_cdf(const RdeConstants& c, double t) { return 1.0 - G_eval(c, t); }
inline double G_cdf_left(const RdeConstants& c, double t) {
    return t <= 0.0 ? 0.0 : 1.0 - G_eval(c, t);
}

// Mean of the m-side fixed point, derived as -alpha ln(w_o/alpha).
double w_m(const RdeConstants& c);

// Inverse-CDF samplers for the closed forms.
double sample_F(const RdeConstants& c, RngStream& rng);
double sample_G(const RdeConstants& c, RngStream& rng);

}  // namespace m2o
