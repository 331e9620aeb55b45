#pragma once

#include <functional>

#include "cvlab/common.hpp"

namespace cvlab {

struct QuadResult {
    cplx value{0.0, 0.0};
    double error_estimate = 0.0;
    long long evaluations = 0;
    bool converged = true;
};

// Adaptive Gauss-Kronrod 7/15 panels with interval bisection. Absolute
// tolerance; panels that fail to converge by max_depth leave converged=false
// with the achieved error estimate.
QuadResult integrate_adaptive(const std::function<cplx(double)>& f, double lo, double hi,
                              double abs_tol, int max_depth = 24);

}  // namespace cvlab
