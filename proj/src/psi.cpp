#include "bgls/psi.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "bgls/sup_search.hpp"

namespace bgls {

namespace {

std::vector<double> chebyshev_us(double eps, int n) {
    std::vector<double> u(n);
    for (int i = 0; i < n; ++i)
        u[i] = eps + (1.0 - 2.0 * eps) * 0.5 *
                         (1.0 - std::cos(M_PI * static_cast<double>(i) / (n - 1)));
    return u;
}

}  // namespace

void PsiFunction::sanity_scan() const {
    for (double u : chebyshev_us(1e-3, 33)) {
        const double p = iv_.p_of_u(u);
        const double lv = log_eval_(p);
        if (std::isnan(lv) || (std::isinf(lv) && lv > 0))
            throw std::invalid_argument("PsiFunction: not positive-finite at p = " +
                                        std::to_string(p));
        if (lv == -kInf)
            throw std::invalid_argument("PsiFunction: vanishes at p = " + std::to_string(p));
    }
}

PsiFunction PsiFunction::formula(const Interval& iv, std::function<double(double)> f,
                                 std::string desc) {
    PsiFunction psi;
    psi.iv_ = iv;
    psi.kind_ = PsiKind::formula;
    psi.desc_ = std::move(desc);
    psi.log_eval_ = [f = std::move(f)](double p) { return std::log(f(p)); };
    psi.sanity_scan();
    return psi;
}

PsiFunction PsiFunction::log_formula(const Interval& iv, std::function<double(double)> log_f,
                                     std::string desc) {
    PsiFunction psi;
    psi.iv_ = iv;
    psi.kind_ = PsiKind::formula;
    psi.desc_ = std::move(desc);
    psi.log_eval_ = std::move(log_f);
    psi.sanity_scan();
    return psi;
}

PsiFunction PsiFunction::constant(const Interval& iv, double c) {
    if (!(c > 0.0) || !std::isfinite(c))
        throw std::invalid_argument("PsiFunction::constant: c > 0 required");
    PsiFunction psi;
    psi.iv_ = iv;
    psi.kind_ = PsiKind::constant;
    psi.desc_ = "const(" + std::to_string(c) + ")";
    const double lc = std::log(c);
    psi.log_eval_ = [lc](double) { return lc; };
    return psi;
}

PsiFunction PsiFunction::power_formula(const Interval& iv, double c, double ga, double gb) {
    if (!(c > 0.0)) throw std::invalid_argument("power_formula: c > 0 required");
    PsiFunction psi;
    psi.iv_ = iv;
    psi.kind_ = PsiKind::formula;
    psi.desc_ = "power(" + std::to_string(c) + "," + std::to_string(ga) + "," +
                std::to_string(gb) + ")";
    const double lc = std::log(c);
    const double a = iv.a, b = iv.b;
    if (iv.b_infinite())
        psi.log_eval_ = [lc, ga, gb, a](double p) {
            return lc - ga * std::log(p - a) + gb * std::log(p);
        };
    else
        psi.log_eval_ = [lc, ga, gb, a, b](double p) {
            return lc - ga * std::log(p - a) - gb * std::log(b - p);
        };
    psi.sanity_scan();
    return psi;
}

PsiFunction PsiFunction::from_representation(ProductFunction f, const Interval& iv,
                                             double tol) {
    auto rep = std::make_shared<const ProductFunction>(std::move(f));
    LpOptions lp;
    lp.quad.rel_tol = tol;

    // Finiteness sweep before accepting the generator.
    std::vector<double> us = chebyshev_us(1e-3, 17);
    for (double u : chebyshev_us(1e-6, 5)) us.push_back(u);
    for (double u : us) {
        const double p = iv.p_of_u(u);
        const LpResult r = lp_norm(*rep, p, lp);
        if (!(r.log_value < kInf))
            throw DivergenceError("from_representation: |f|_p diverges at p = " +
                                  std::to_string(p));
    }

    PsiFunction psi;
    psi.iv_ = iv;
    psi.kind_ = PsiKind::representation;
    psi.rep_ = rep;
    psi.desc_ = "rep";
    psi.log_eval_ = [rep, lp](double p) { return lp_norm(*rep, p, lp).log_value; };
    return psi;
}

double PsiFunction::log_eval(double p) const {
    if (!iv_.contains(p))
        throw std::domain_error("PsiFunction: p = " + std::to_string(p) + " outside " +
                                iv_.str());
    return log_eval_(p);
}

double PsiFunction::eval(double p) const { return std::exp(log_eval(p)); }

PsiFunction multiply_psi(const PsiFunction& x, const PsiFunction& y) {
    if (!(x.interval() == y.interval()))
        throw std::invalid_argument("multiply_psi: interval mismatch " + x.interval().str() +
                                    " vs " + y.interval().str());
    return PsiFunction::log_formula(
        x.interval(), [x, y](double p) { return x.log_eval(p) + y.log_eval(p); },
        "prod(" + x.describe() + "," + y.describe() + ")");
}

namespace {

// Endpoint estimate with divergence projection: grow through a refining
// schedule; if the values keep increasing, project the log-log trend to a
// machine-edge abscissa and compare against the divergence threshold.
struct EndpointEstimate {
    double value = kNaN;  // +inf if divergent
    bool divergent = false;
};

EndpointEstimate endpoint_estimate(const PsiFunction& psi, bool at_b) {
    static const std::vector<double> eps = {1e-2, 1e-3, 1e-4, 1e-5, 1e-6,
                                            1e-7, 1e-8, 1e-10, 1e-12};
    std::vector<double> vals;
    for (double e : eps) {
        const double u = at_b ? 1.0 - e : e;
        vals.push_back(psi.eval(psi.interval().p_of_u(u)));
    }
    const std::size_t n = vals.size();
    bool increasing = true;
    for (std::size_t i = n - 4; i + 1 < n; ++i)
        if (!(vals[i + 1] > vals[i])) increasing = false;

    EndpointEstimate out;
    if (increasing) {
        const double g = (std::log(vals[n - 1]) - std::log(vals[n - 2])) /
                         (std::log(1.0 / eps[n - 1]) - std::log(1.0 / eps[n - 2]));
        const double proj =
            std::log(vals[n - 1]) + g * (std::log(1e300) - std::log(1.0 / eps[n - 1]));
        if (proj > std::log(1e6)) {
            out.divergent = true;
            out.value = kInf;
            return out;
        }
    }
    out.value = vals[n - 1];
    return out;
}

}  // namespace

PsiClassReport classify(const PsiFunction& psi, int grid_size) {
    if (grid_size < 16) throw std::invalid_argument("classify: grid_size >= 16 required");
    const Interval& iv = psi.interval();
    PsiClassReport rep;

    // Positivity / continuity / psi >= 1 on a uniform-in-u grid plus the
    // refining endpoint grids.
    bool ge_one = true;
    std::vector<double> us;
    for (int i = 0; i < grid_size; ++i)
        us.push_back(1e-4 + (1.0 - 2e-4) * i / (grid_size - 1.0));
    for (double e : {1e-2, 1e-3, 1e-4, 1e-5, 1e-6, 1e-7, 1e-8}) {
        us.push_back(e);
        us.push_back(1.0 - e);
    }
    std::vector<double> vals;
    for (double u : us) {
        const double v = psi.eval(iv.p_of_u(u));
        vals.push_back(v);
        if (v < 1.0) ge_one = false;
    }
    // Jump scan with bisection: a genuine discontinuity keeps a large gap as
    // the pair closes in.
    for (int i = 0; i + 1 < grid_size; ++i) {
        double ul = us[i], ur = us[i + 1];
        double vl = vals[i], vr = vals[i + 1];
        for (int it = 0; it < 40; ++it) {
            if (std::abs(vr - vl) <= 0.5 * std::max({1.0, std::abs(vl), std::abs(vr)})) break;
            const double um = 0.5 * (ul + ur);
            const double vm = psi.eval(iv.p_of_u(um));
            if (std::abs(vm - vl) >= std::abs(vr - vm)) {
                ur = um;
                vr = vm;
            } else {
                ul = um;
                vl = vm;
            }
            if (ur - ul < 1e-13) {
                rep.continuous = false;
                break;
            }
        }
    }

    const EndpointEstimate at_a = endpoint_estimate(psi, false);
    const EndpointEstimate at_b = endpoint_estimate(psi, true);
    rep.psi_at_a_plus = at_a.value;
    rep.psi_at_b_minus = at_b.value;
    rep.in_EPsi = ge_one && at_b.divergent;

    // Midpoint convexity of p log psi(p) on a uniform p-grid (a bounded
    // window when b = inf).
    const double lo = iv.a + (iv.b_infinite() ? 1e-2 : (iv.b - iv.a) * 1e-4);
    const double hi = iv.b_infinite() ? iv.a + 50.0 : iv.b - (iv.b - iv.a) * 1e-4;
    rep.log_convex = true;
    const int m = grid_size;
    std::vector<double> g(m);
    double gscale = 1.0;
    for (int i = 0; i < m; ++i) {
        const double p = lo + (hi - lo) * i / (m - 1.0);
        g[i] = p * psi.log_eval(p);
        gscale = std::max(gscale, std::abs(g[i]));
    }
    for (int i = 1; i + 1 < m; ++i)
        if (g[i - 1] + g[i + 1] - 2.0 * g[i] < -1e-8 * gscale) rep.log_convex = false;

    // Representation consistency: eval against the quadrature route.
    if (psi.representation()) {
        rep.in_Psi = true;
        LpOptions forced;
        forced.force_quadrature = true;
        forced.quad.rel_tol = 1e-9;
        const double rtol = psi.representation()->analytic() ? 1e-6 : 1e-4;
        for (double u : {0.15, 0.35, 0.5, 0.65, 0.85}) {
            const double p = iv.p_of_u(u);
            const double here = psi.eval(p);
            const double there = lp_norm(*psi.representation(), p, forced).value;
            if (std::abs(here - there) > rtol * std::max(here, there)) rep.in_Psi = false;
        }
    }
    return rep;
}

ProductFunction canonical_representation(const Interval& iv, const WeightedDomain& dom) {
    if (iv.b_infinite())
        throw std::invalid_argument("canonical_representation: finite b required");
    const BlockSpec& first = dom.blocks.front();
    if (first.dim != 1 || first.kind == WeightKind::custom)
        throw std::invalid_argument(
            "canonical_representation: first block must be 1-D power/Lebesgue");
    const double theta = (first.kind == WeightKind::power) ? first.theta : 0.0;

    std::vector<Factor> factors;
    Factor1D lead;
    lead.power_pieces.push_back({0.0, 1.0, 1.0, -(1.0 + theta) / iv.b});
    lead.power_pieces.push_back({1.0, kInf, 1.0, -(1.0 + theta) / iv.a});
    factors.emplace_back(std::move(lead));
    for (std::size_t r = 1; r < dom.block_count(); ++r) {
        if (dom.blocks[r].dim != 1)
            throw std::invalid_argument("canonical_representation: 1-D blocks required");
        Factor1D ind;
        ind.power_pieces.push_back({0.0, 1.0, 1.0, 0.0});
        factors.emplace_back(std::move(ind));
    }
    return ProductFunction(dom, std::move(factors));
}

PsiFunction canonical_psi(const Interval& iv, const WeightedDomain& dom) {
    return PsiFunction::from_representation(canonical_representation(iv, dom), iv);
}

}  // namespace bgls
