#pragma once

#include <functional>
#include <vector>

#include "bgls/interval.hpp"
#include "bgls/numerics.hpp"

namespace bgls {

// Where a supremum over the open interval (a, b) was located. Suprema that
// are only attained in the limit toward an endpoint are tagged rather than
// reported at a fake interior abscissa.
enum class ArgmaxTag { interior, toward_a, toward_b };

inline const char* to_string(ArgmaxTag t) {
    switch (t) {
        case ArgmaxTag::toward_a: return "a+";
        case ArgmaxTag::toward_b: return "b-";
        default: return "interior";
    }
}

struct ProfilePoint {
    double p;
    double value;
};

// Result of maximizing a ratio over p in (a, b).
//
// value is exp(log_value) and may overflow to +inf even when the supremum is
// finite on the log scale; consumers that chain suprema (index slopes,
// Shimogaki machinery) must read log_value.
struct SupOverP {
    double value = 0.0;
    double log_value = -kInf;
    double argmax_p = kNaN;
    ArgmaxTag tag = ArgmaxTag::interior;
    bool diverged = false;                // sup reported infinite (proxy or exact)
    std::vector<ProfilePoint> profile;    // coarse sampled curve, ascending in p
};

// Refining-grid search schedule. Each level lays a Chebyshev-style grid over
// u in [eps, 1-eps]; successive levels shrink eps toward the endpoints. The
// best bracket found anywhere is polished by golden section.
struct SupOptions {
    int points_per_level = 65;
    std::vector<double> epsilons = {1e-2, 1e-3, 1e-4, 1e-5, 1e-6, 1e-7, 1e-8};
    int golden_iters = 160;
    double divergence_threshold = 1e12;
    bool keep_profile = true;

    static SupOptions standard() { return SupOptions{}; }

    // Cheaper schedule for objectives backed by quadrature.
    static SupOptions reduced() {
        SupOptions o;
        o.points_per_level = 33;
        o.epsilons = {1e-2, 1e-3, 1e-4, 1e-5, 1e-6};
        o.golden_iters = 80;
        return o;
    }

    // Pushes much closer to the endpoints; used by membership tests that need
    // to see psi grow past fixed thresholds.
    static SupOptions deep() {
        SupOptions o;
        o.epsilons = {1e-2, 1e-3, 1e-4, 1e-5, 1e-6, 1e-7, 1e-8,
                      1e-9, 1e-10, 1e-11, 1e-12, 1e-13, 3e-14};
        return o;
    }
};

// Maximize exp(log_g(p)) over p in (a, b). log_g may return -inf (treated as
// a zero sample), +inf (exact divergence) or NaN (skipped).
SupOverP sup_over_p(const Interval& iv, const std::function<double(double)>& log_g,
                    const SupOptions& opts = SupOptions::standard());

}  // namespace bgls
