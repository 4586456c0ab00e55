#pragma once

#include <functional>

namespace m2o {

struct QuadResult {
    double value = 0.0;
    double error = 0.0;  // accumulated error estimate
    bool converged = true;
};

// Adaptive quadrature on [a, b] with 15-point Kronrod / 7-point Gauss panels
// and recursive bisection until the panel error estimate meets the target.
QuadResult adaptive_quad(const std::function<double(double)>& f, double a, double b,
                         double abs_tol, int max_depth = 48);

}  // namespace m2o
