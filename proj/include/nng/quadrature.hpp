#pragma once

#include <functional>

namespace nng {

struct QuadratureResult {
    double value = 0.0;
    double error = 0.0;   // estimated absolute error
    int intervals = 0;
    bool converged = false;
};

/// Globally adaptive Gauss-Kronrod (7/15) integration of f over [a, b].
/// Subdivides the interval with the largest error estimate until the total
/// estimate drops below max(abs_tol, rel_tol * |value|).
QuadratureResult integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                                    double abs_tol, double rel_tol, int max_intervals = 10000);

} // namespace nng
