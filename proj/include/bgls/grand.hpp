#pragma once

#include <vector>

#include "bgls/function.hpp"
#include "bgls/psi.hpp"
#include "bgls/sup_search.hpp"

namespace bgls {

// The space G(psi) of measurable h on the weighted product domain with
// sup_p |h|_p / psi(p) finite, p ranging over the open norming interval.
struct GrandSpace {
    WeightedDomain domain;
    PsiFunction psi;

    GrandSpace(WeightedDomain d, PsiFunction ps);
    const Interval& interval() const { return psi.interval(); }
};

struct NormOptions {
    LpOptions lp;
    SupOptions sup = SupOptions::standard();
};

// Reduced supremum schedule when every |h|_p sample needs quadrature.
NormOptions default_norm_options(const ProductFunction& f);

// ||h|| = sup_p |h|_p / psi(p). Samples where |h|_p exceeds the quadrature
// budget are skipped; an exactly divergent |h|_p makes the norm infinite.
SupOverP bgls_norm(const GrandSpace& space, const ProductFunction& f,
                   const NormOptions& opts);
SupOverP bgls_norm(const GrandSpace& space, const ProductFunction& f);

// phi(delta) = sup_p delta^{1/p} / psi(p), the norm of any indicator of
// measure delta. log_delta keeps delta = 10^{+-1000} representable.
SupOverP fundamental_function(const GrandSpace& space, double delta);
SupOverP fundamental_function_log(const GrandSpace& space, double log_delta,
                                  const SupOptions& opts = SupOptions::standard());

// Limit slopes of log phi(delta) against log delta. The slope tends to 1/b
// as delta -> 0 and to 1/a as delta -> inf. Sampled at delta = 10^{+-2m},
// m = 1..levels; the finite-m bias decays like 1/m, which the slope
// extrapolation removes.
struct FundFnSlopes {
    double at_zero = kNaN;
    double at_inf = kNaN;
    double est_error = kNaN;  // max extrapolation discrepancy of the two
};
FundFnSlopes fundfn_slopes(const GrandSpace& space, int levels = 10);

enum class SlopeDirection { to_zero, to_infinity };
double fundfn_asymptotic_slope(const GrandSpace& space, SlopeDirection dir,
                               int levels = 10);

// Whether phi(delta) -> 0 as delta -> 0 (true exactly when psi blows up at
// the right endpoint fast enough to kill every fixed power of delta).
bool fundfn_vanishes_at_zero(const GrandSpace& space);

// Membership in the closed-up subspace G^o: the tail supremum
// sup_{p in (b - eps, b)} |h|_p / psi(p) must fall below a small fraction
// of the full norm as eps shrinks through a deep schedule.
struct GoReport {
    bool member = false;
    double norm = kNaN;
    double tail_value = kNaN;  // tail sup at the deepest eps
    double ratio = kNaN;       // tail_value / norm
    std::vector<double> tail_values;
};
GoReport in_G_o(const GrandSpace& space, const ProductFunction& f,
                const NormOptions& opts);
GoReport in_G_o(const GrandSpace& space, const ProductFunction& f);

// Monotone approximation by truncations: ||trunc(h, n)|| must be
// nondecreasing in n and approach ||h|| from below.
struct FatouReport {
    std::vector<int> ns;
    std::vector<double> truncated_norms;
    double limit_norm = kNaN;
    bool monotone = false;        // nondecreasing within tolerance
    bool below_limit = false;     // every truncation at or below the limit
    double final_gap_ratio = kNaN;  // (limit - last) / limit
};
FatouReport fatou_check(const GrandSpace& space, const ProductFunction& f,
                        const std::vector<int>& ns, const NormOptions& opts);
// Same along n = 2, 4, ..., n_max.
FatouReport fatou_check(const GrandSpace& space, const ProductFunction& f, int n_max,
                        const NormOptions& opts);

}  // namespace bgls
