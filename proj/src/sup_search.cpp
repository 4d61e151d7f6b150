#include "bgls/sup_search.hpp"

#include <algorithm>
#include <cmath>

namespace bgls {

namespace {

// Chebyshev-Lobatto points mapped to [eps, 1-eps]: clustered at both ends,
// endpoints included.
std::vector<double> level_grid(double eps, int n) {
    std::vector<double> u(n);
    for (int i = 0; i < n; ++i) {
        const double c = 0.5 * (1.0 - std::cos(M_PI * static_cast<double>(i) / (n - 1)));
        u[i] = eps + (1.0 - 2.0 * eps) * c;
    }
    return u;
}

}  // namespace

SupOverP sup_over_p(const Interval& iv, const std::function<double(double)>& log_g,
                    const SupOptions& opts) {
    SupOverP out;

    // Thin intervals can round a mapped sample onto an open endpoint, where
    // the objective is undefined; every sampled p stays strictly interior.
    const auto p_at = [&iv](double u) {
        double p = iv.p_of_u(u);
        if (p <= iv.a) p = std::nextafter(iv.a, kInf);
        if (!iv.b_infinite() && p >= iv.b) p = std::nextafter(iv.b, -kInf);
        return p;
    };

    double best_log = -kInf;
    double best_u = kNaN;
    double bracket_lo = kNaN, bracket_hi = kNaN;

    std::vector<double> level_max;        // per-level max of log_g
    std::vector<int> level_move;          // -1 toward a, +1 toward b, 0 interior
    const std::size_t nlev = opts.epsilons.size();

    double prev_eps = kNaN;
    for (std::size_t lev = 0; lev < nlev; ++lev) {
        const double eps = opts.epsilons[lev];
        const std::vector<double> us = level_grid(eps, opts.points_per_level);

        double lev_best = -kInf;
        int lev_idx = -1;
        for (int i = 0; i < static_cast<int>(us.size()); ++i) {
            const double p = p_at(us[i]);
            double v = log_g(p);
            if (std::isnan(v)) continue;
            if (std::isinf(v) && v > 0) {
                out.diverged = true;
                out.value = kInf;
                out.log_value = kInf;
                out.argmax_p = p;
                return out;
            }
            if (opts.keep_profile && lev == 0)
                out.profile.push_back({p, std::exp(v)});
            if (v > lev_best) {
                lev_best = v;
                lev_idx = i;
            }
        }
        level_max.push_back(lev_best);

        int move = 0;
        if (lev > 0 && lev_idx >= 0) {
            if (us[lev_idx] < prev_eps) move = -1;
            else if (us[lev_idx] > 1.0 - prev_eps) move = +1;
        }
        level_move.push_back(move);

        if (lev_idx >= 0 && lev_best > best_log) {
            best_log = lev_best;
            best_u = us[lev_idx];
            bracket_lo = us[std::max(lev_idx - 1, 0)];
            bracket_hi = us[std::min<std::size_t>(lev_idx + 1, us.size() - 1)];
        }
        prev_eps = eps;
    }

    if (!std::isfinite(best_log) && best_log < 0) {
        // Objective vanished everywhere it was sampled.
        out.value = 0.0;
        out.log_value = -kInf;
        out.argmax_p = p_at(0.5);
        return out;
    }

    // Golden polish inside the winning bracket.
    if (bracket_hi > bracket_lo) {
        const double u_ref = golden_max(
            [&](double u) {
                const double v = log_g(p_at(u));
                return std::isnan(v) ? -kInf : v;
            },
            bracket_lo, bracket_hi, opts.golden_iters);
        const double v_ref = log_g(p_at(u_ref));
        if (!std::isnan(v_ref) && v_ref > best_log) {
            best_log = v_ref;
            best_u = u_ref;
        }
    }

    out.log_value = best_log;
    out.value = std::exp(best_log);
    out.argmax_p = p_at(best_u);

    // Endpoint-limit tag: the per-level maximizer kept stepping into the
    // newly exposed region next to an endpoint on the last three transitions.
    int trail_a = 0, trail_b = 0;
    for (std::size_t lev = level_move.size(); lev-- > 1;) {
        if (level_move[lev] == -1 && trail_b == 0) ++trail_a;
        else if (level_move[lev] == +1 && trail_a == 0) ++trail_b;
        else break;
    }
    const int need = std::min<int>(3, static_cast<int>(nlev) - 1);
    if (trail_a >= need) out.tag = ArgmaxTag::toward_a;
    else if (trail_b >= need) out.tag = ArgmaxTag::toward_b;

    // Infinite-sup proxy: past the threshold and still growing geometrically
    // across the last refinement levels.
    if (level_max.size() >= 4) {
        const std::size_t n = level_max.size();
        const bool growing = level_max[n - 1] > level_max[n - 2] &&
                             level_max[n - 2] > level_max[n - 3] &&
                             level_max[n - 3] > level_max[n - 4] &&
                             level_max[n - 1] - level_max[n - 4] > std::log(10.0);
        if (growing && best_log > std::log(opts.divergence_threshold)) {
            out.diverged = true;
            out.value = kInf;
        }
    }
    return out;
}

}  // namespace bgls
