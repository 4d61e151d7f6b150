#pragma once

#include <functional>

#include "bgls/numerics.hpp"

namespace bgls {

struct QuadOptions {
    double rel_tol = 1e-9;
    double abs_tol = 1e-300;
    int max_intervals = 10000;
};

struct QuadResult {
    double value = 0.0;
    double est_error = 0.0;   // absolute
    int intervals = 0;
    long evaluations = 0;
    bool converged = false;
};

// Adaptive Gauss(7)-Kronrod(15) integration of f over (lo, hi). Either limit
// may be infinite; infinite tails are mapped to finite intervals before the
// adaptive pass. Endpoints are never sampled, so integrable endpoint
// singularities are admissible (convergence may require many subdivisions;
// callers with known singular endpoints should substitute first).
QuadResult integrate(const std::function<double(double)>& f, double lo, double hi,
                     const QuadOptions& opts = QuadOptions{});

}  // namespace bgls
