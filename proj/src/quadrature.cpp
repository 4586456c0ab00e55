#include "m2o/quadrature.hpp"

#include <cmath>

namespace m2o {

namespace {

// QUADPACK 15-point Kronrod abscissae on [-1,1] (positive half) and weights;
// the embedded 7-point Gauss rule uses the even-index nodes.
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr double kWg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
    double kronrod;
    double err;
};

Panel gk15(const std::function<double(double)>& f, double a, double b) {
    const double c = 0.5 * (a + b), h = 0.5 * (b - a);
    double fc = f(c);
    double res_k = kWgk[7] * fc;
    double res_g = kWg[3] * fc;
    for (int j = 0; j < 7; ++j) {
        double x = h * kXgk[j];
        double fsum = f(c - x) + f(c + x);
        res_k += kWgk[j] * fsum;
        if (j % 2 == 1) res_g += kWg[j / 2] * fsum;
    }
    res_k *= h;
    res_g *= h;
    return {res_k, std::fabs(res_k - res_g)};
}

void refine(const std::function<double(double)>& f, double a, double b, double tol,
            int depth, QuadResult& acc) {
    Panel p = gk15(f, a, b);
    if (p.err <= tol || depth <= 0) {
        acc.value += p.kronrod;
        acc.error += p.err;
        if (p.err > tol) acc.converged = false;
        return;
    }
    double mid = 0.5 * (a + b);
    refine(f, a, mid, 0.5 * tol, depth - 1, acc);
    refine(f, mid, b, 0.5 * tol, depth - 1, acc);
}

}  // namespace

QuadResult adaptive_quad(const std::function<double(double)>& f, double a, double b,
                         double abs_tol, int max_depth) {
    QuadResult acc;
    if (a == b) return acc;
    refine(f, a, b, abs_tol, max_depth, acc);
    return acc;
}

}  // namespace m2o
