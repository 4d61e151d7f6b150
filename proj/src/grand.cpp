#include "bgls/grand.hpp"

#include <algorithm>
#include <cmath>

#include "bgls/errors.hpp"
#include "bgls/numerics.hpp"

namespace bgls {

GrandSpace::GrandSpace(WeightedDomain d, PsiFunction ps)
    : domain(std::move(d)), psi(std::move(ps)) {}

NormOptions default_norm_options(const ProductFunction& f) {
    NormOptions opts;
    if (!f.analytic()) opts.sup = SupOptions::reduced();
    return opts;
}

namespace {

// Objective for the norm sup. Budget overruns at extreme p are reported as
// NaN so the search skips that sample instead of aborting.
std::function<double(double)> norm_objective(const GrandSpace& space,
                                             const ProductFunction& f,
                                             const LpOptions& lp) {
    return [&space, &f, lp](double p) {
        double log_lp;
        try {
            log_lp = lp_norm(f, p, lp).log_value;
        } catch (const ToleranceError&) {
            return kNaN;
        }
        if (log_lp == kInf) return kInf;
        return log_lp - space.psi.log_eval(p);
    };
}

}  // namespace

SupOverP bgls_norm(const GrandSpace& space, const ProductFunction& f,
                   const NormOptions& opts) {
    return sup_over_p(space.interval(), norm_objective(space, f, opts.lp), opts.sup);
}

SupOverP bgls_norm(const GrandSpace& space, const ProductFunction& f) {
    return bgls_norm(space, f, default_norm_options(f));
}

SupOverP fundamental_function_log(const GrandSpace& space, double log_delta,
                                  const SupOptions& opts) {
    const PsiFunction& psi = space.psi;
    return sup_over_p(
        space.interval(),
        [&psi, log_delta](double p) { return log_delta / p - psi.log_eval(p); }, opts);
}

SupOverP fundamental_function(const GrandSpace& space, double delta) {
    if (!(delta > 0.0)) throw std::invalid_argument("fundamental_function: delta > 0 required");
    return fundamental_function_log(space, std::log(delta));
}

FundFnSlopes fundfn_slopes(const GrandSpace& space, int levels) {
    if (levels < 4) throw std::invalid_argument("fundfn_slopes: levels >= 4 required");
    SupOptions opts = SupOptions::standard();
    opts.keep_profile = false;

    auto limit_toward = [&](double sign) {
        std::vector<double> ts, phis;
        for (int m = 1; m <= levels; ++m) {
            const double t = sign * 2.0 * m * std::log(10.0);
            ts.push_back(t);
            phis.push_back(fundamental_function_log(space, t, opts).log_value);
        }
        return slope_limit(ts, phis);
    };

    FundFnSlopes out;
    const SlopeLimit dn = limit_toward(-1.0);
    const SlopeLimit up = limit_toward(+1.0);
    out.at_zero = dn.value;
    out.at_inf = up.value;
    out.est_error = std::max(std::abs(dn.value - dn.last), std::abs(up.value - up.last));
    return out;
}

double fundfn_asymptotic_slope(const GrandSpace& space, SlopeDirection dir, int levels) {
    const FundFnSlopes both = fundfn_slopes(space, levels);
    return dir == SlopeDirection::to_zero ? both.at_zero : both.at_inf;
}

bool fundfn_vanishes_at_zero(const GrandSpace& space) {
    SupOptions opts = SupOptions::standard();
    opts.keep_profile = false;
    std::vector<double> logs;
    for (double k : {1.0, 2.0, 4.0, 8.0, 16.0, 64.0, 256.0, 1024.0}) {
        const double ld = -k * std::log(10.0);
        logs.push_back(fundamental_function_log(space, ld, opts).log_value);
    }
    const std::size_t n = logs.size();
    for (std::size_t i = n - 4; i + 1 < n; ++i)
        if (!(logs[i + 1] < logs[i])) return false;
    return logs.back() < std::log(1e-12);
}

namespace {

// Supremum of the norm objective restricted to p in (b - eps_frac * span, b).
// For b = inf the window is taken in the compactified coordinate.
double tail_sup(const GrandSpace& space, const std::function<double(double)>& g,
                double eps_frac, const SupOptions& base) {
    const Interval& iv = space.interval();
    double pl;
    if (iv.b_infinite())
        pl = iv.p_of_u(1.0 - eps_frac);
    else
        pl = iv.b - eps_frac * (iv.b - iv.a);
    SupOptions opts = base;
    opts.keep_profile = false;
    const SupOverP s = sup_over_p(Interval(pl, iv.b), g, opts);
    return s.diverged ? kInf : s.log_value;
}

}  // namespace

GoReport in_G_o(const GrandSpace& space, const ProductFunction& f,
                const NormOptions& opts) {
    GoReport rep;
    const SupOverP whole = bgls_norm(space, f, opts);
    rep.norm = whole.value;
    if (!whole.diverged && whole.value == 0.0) {
        // Zero function: the ratio is identically zero.
        rep.member = true;
        rep.tail_value = 0.0;
        rep.ratio = 0.0;
        return rep;
    }
    if (whole.diverged || !(whole.value > 0.0)) return rep;

    auto g = norm_objective(space, f, opts.lp);
    SupOptions tail_opts = opts.sup;
    tail_opts.points_per_level = 33;
    tail_opts.epsilons = {1e-2, 1e-4, 1e-6, 1e-8};

    static const std::vector<double> schedule = {1e-2,  1e-4,  1e-6,  1e-8,
                                                 1e-10, 1e-12, 1e-13, 3e-14};
    for (double eps : schedule) {
        const double t = tail_sup(space, g, eps, tail_opts);
        rep.tail_values.push_back(std::exp(t));
        if (t == kInf) {
            rep.tail_value = kInf;
            rep.ratio = kInf;
            return rep;
        }
    }
    rep.tail_value = rep.tail_values.back();
    rep.ratio = rep.tail_value / rep.norm;

    // Member when the tail is already negligible and still falling.
    bool nonincreasing = true;
    const std::size_t n = rep.tail_values.size();
    for (std::size_t i = n - 3; i + 1 < n; ++i)
        if (rep.tail_values[i + 1] > rep.tail_values[i] * (1.0 + 1e-9)) nonincreasing = false;
    rep.member = nonincreasing && rep.ratio < 1e-3;
    return rep;
}

GoReport in_G_o(const GrandSpace& space, const ProductFunction& f) {
    return in_G_o(space, f, default_norm_options(f));
}

FatouReport fatou_check(const GrandSpace& space, const ProductFunction& f,
                        const std::vector<int>& ns, const NormOptions& opts) {
    if (ns.empty()) throw std::invalid_argument("fatou_check: empty n schedule");
    FatouReport rep;
    rep.ns = ns;
    const SupOverP whole = bgls_norm(space, f, opts);
    rep.limit_norm = whole.value;
    for (int n : ns) {
        const ProductFunction tr = truncate(f, n);
        rep.truncated_norms.push_back(bgls_norm(space, tr, opts).value);
    }
    rep.monotone = true;
    for (std::size_t i = 0; i + 1 < rep.truncated_norms.size(); ++i)
        if (rep.truncated_norms[i + 1] < rep.truncated_norms[i] * (1.0 - 1e-9))
            rep.monotone = false;
    rep.below_limit = true;
    if (std::isfinite(rep.limit_norm))
        for (double v : rep.truncated_norms)
            if (v > rep.limit_norm * (1.0 + 1e-9)) rep.below_limit = false;
    if (std::isfinite(rep.limit_norm) && rep.limit_norm > 0.0)
        rep.final_gap_ratio = (rep.limit_norm - rep.truncated_norms.back()) / rep.limit_norm;
    return rep;
}

FatouReport fatou_check(const GrandSpace& space, const ProductFunction& f, int n_max,
                        const NormOptions& opts) {
    if (n_max < 2) throw std::invalid_argument("fatou_check: n_max >= 2 required");
    std::vector<int> ns;
    for (int n = 2; n <= n_max; n *= 2) ns.push_back(n);
    if (ns.back() != n_max) ns.push_back(n_max);
    return fatou_check(space, f, ns, opts);
}

}  // namespace bgls
