#include "bgls/criteria.hpp"

#include <cmath>
#include <cstdio>
#include <variant>

#include "bgls/errors.hpp"
#include "bgls/numerics.hpp"
#include "bgls/quadrature.hpp"

namespace bgls {

std::string to_string(OperatorTag op) {
    switch (op) {
        case OperatorTag::P_alpha: return "P_alpha";
        case OperatorTag::Q_beta: return "Q_beta";
        case OperatorTag::maximal: return "maximal";
        case OperatorTag::hilbert: return "hilbert";
        case OperatorTag::fourier: return "fourier";
    }
    return "?";
}

std::string to_string(ProbeReport::Flag flag) {
    switch (flag) {
        case ProbeReport::Flag::plateau: return "plateau";
        case ProbeReport::Flag::growth: return "growth";
        case ProbeReport::Flag::inconclusive: return "inconclusive";
    }
    return "?";
}

namespace {

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

double require_param(const std::map<std::string, double>& params, const char* name) {
    auto it = params.find(name);
    if (it == params.end())
        throw std::invalid_argument(std::string("boundedness: missing parameter ") + name);
    const double v = it->second;
    if (!(v > 0.0 && v < 1.0))
        throw std::invalid_argument(std::string("boundedness: ") + name +
                                    " must lie in (0,1), got " + fmt(v));
    return v;
}

}  // namespace

CriterionVerdict boundedness(OperatorTag op, const Interval& iv,
                             const std::map<std::string, double>& parameters) {
    CriterionVerdict v;
    v.op = op;
    v.parameters = parameters;
    const double inv_a = 1.0 / iv.a;
    const double inv_b = iv.b_infinite() ? 0.0 : 1.0 / iv.b;
    switch (op) {
        case OperatorTag::P_alpha: {
            const double alpha = require_param(parameters, "alpha");
            v.bounded = alpha > inv_a;
            v.condition_text = "bounded iff alpha > 1/a; alpha = " + fmt(alpha) +
                               ", 1/a = " + fmt(inv_a);
            break;
        }
        case OperatorTag::Q_beta: {
            const double beta = require_param(parameters, "beta");
            v.bounded = beta < inv_b;
            v.condition_text =
                "bounded iff beta < 1/b; beta = " + fmt(beta) + ", 1/b = " + fmt(inv_b);
            break;
        }
        case OperatorTag::maximal:
            v.bounded = iv.a > 1.0;
            v.condition_text = "bounded iff a > 1; a = " + fmt(iv.a);
            break;
        case OperatorTag::hilbert:
            v.bounded = iv.a > 1.0 && !iv.b_infinite();
            v.condition_text = "bounded iff a > 1 and b < inf; a = " + fmt(iv.a) +
                               ", b = " + (iv.b_infinite() ? std::string("inf") : fmt(iv.b));
            break;
        case OperatorTag::fourier:
            v.bounded = iv.a > 1.0 && !iv.b_infinite();
            v.condition_text = "norm convergence iff a > 1 and b < inf; a = " + fmt(iv.a) +
                               ", b = " + (iv.b_infinite() ? std::string("inf") : fmt(iv.b));
            break;
    }
    return v;
}

namespace {

// integral of s^{q-1} over (x, y) within (0, inf); +inf when divergent.
double power_segment(double x, double y, double q) {
    if (!(x < y)) return 0.0;
    if (q == 0.0) {
        if (x == 0.0 || y == kInf) return kInf;
        return std::log(y / x);
    }
    if (q > 0.0) {
        if (y == kInf) return kInf;
        return (std::pow(y, q) - std::pow(x, q)) / q;
    }
    if (x == 0.0) return kInf;
    const double top = (y == kInf) ? 0.0 : std::pow(y, q);
    return (top - std::pow(x, q)) / q;
}

const Factor1D& single_unweighted_factor(const ProductFunction& f, const char* who) {
    const WeightedDomain& dom = f.domain();
    if (dom.block_count() != 1 || dom.blocks[0].dim != 1)
        throw StructureError(std::string(who) + ": a single one-dimensional block is required");
    if (dom.blocks[0].kind != WeightKind::lebesgue)
        throw StructureError(std::string(who) + ": an unweighted domain is required");
    const Factor1D* g = std::get_if<Factor1D>(&f.factors()[0]);
    if (g == nullptr)
        throw StructureError(std::string(who) + ": a piecewise factor is required");
    return *g;
}

enum class Side { from_zero, to_inf };

// integral of s^{q0-1} f(s) ds over (0,t) or (t,inf) for the 1-D factor.
double weighted_integral(const Factor1D& g, double q0, double t, Side side) {
    double acc = 0.0;
    for (const PowerPiece& pc : g.power_pieces) {
        const double lo = (side == Side::from_zero) ? pc.lo : std::max(pc.lo, t);
        const double hi = (side == Side::from_zero) ? std::min(pc.hi, t) : pc.hi;
        if (!(lo < hi)) continue;
        const double seg = power_segment(lo, hi, q0 + pc.expnt);
        if (seg == kInf)
            throw DivergenceError("hardy operator: nonintegrable power piece");
        acc += pc.coef * seg;
    }
    for (const NumericPiece& pc : g.numeric_pieces) {
        const double lo = (side == Side::from_zero) ? pc.lo : std::max(pc.lo, t);
        const double hi = (side == Side::from_zero) ? std::min(pc.hi, t) : pc.hi;
        if (!(lo < hi)) continue;
        QuadOptions q;
        q.rel_tol = 1e-10;
        const auto integrand = [&pc, q0](double s) {
            return std::pow(s, q0 - 1.0) * pc.eval(s);
        };
        const QuadResult r = integrate(integrand, lo, hi, q);
        if (!r.converged)
            throw ToleranceError("hardy operator: quadrature budget exhausted", r.value,
                                 r.est_error);
        acc += r.value;
    }
    return acc;
}

void check_hardy_param(double v, const char* who) {
    if (!(v > 0.0 && v < 1.0))
        throw std::invalid_argument(std::string(who) + ": parameter must lie in (0,1)");
}

}  // namespace

double hardy_P(const ProductFunction& f, double alpha, double t) {
    check_hardy_param(alpha, "hardy_P");
    if (!(t > 0.0) || !std::isfinite(t))
        throw std::invalid_argument("hardy_P: t must be positive finite");
    const Factor1D& g = single_unweighted_factor(f, "hardy_P");
    return std::pow(t, -alpha) * weighted_integral(g, alpha, t, Side::from_zero);
}

double hardy_Q(const ProductFunction& f, double beta, double t) {
    check_hardy_param(beta, "hardy_Q");
    if (!(t > 0.0) || !std::isfinite(t))
        throw std::invalid_argument("hardy_Q: t must be positive finite");
    const Factor1D& g = single_unweighted_factor(f, "hardy_Q");
    return std::pow(t, -beta) * weighted_integral(g, beta, t, Side::to_inf);
}

ProductFunction hardy_apply(OperatorTag op, const ProductFunction& f, double param) {
    if (op != OperatorTag::P_alpha && op != OperatorTag::Q_beta)
        throw std::invalid_argument("hardy_apply: only the two Hardy averages apply");
    check_hardy_param(param, "hardy_apply");
    const Factor1D& g = single_unweighted_factor(f, "hardy_apply");

    double lo_min = kInf, hi_max = 0.0;
    for (const PowerPiece& pc : g.power_pieces) {
        lo_min = std::min(lo_min, pc.lo);
        hi_max = std::max(hi_max, pc.hi);
    }
    for (const NumericPiece& pc : g.numeric_pieces) {
        lo_min = std::min(lo_min, pc.lo);
        hi_max = std::max(hi_max, pc.hi);
    }
    if (!(lo_min > 0.0) || !(hi_max < kInf) || !(lo_min < hi_max))
        throw StructureError(
            "hardy_apply: bounded support away from 0 and inf required; truncate first");

    Factor1D out;
    if (op == OperatorTag::P_alpha) {
        const double total = hardy_P(f, param, hi_max) * std::pow(hi_max, param);
        NumericPiece mid;
        mid.lo = lo_min;
        mid.hi = hi_max;
        mid.eval = [f, param](double t) { return hardy_P(f, param, t); };
        out.numeric_pieces.push_back(std::move(mid));
        if (total > 0.0) out.power_pieces.push_back({hi_max, kInf, total, -param});
    } else {
        const double total = hardy_Q(f, param, lo_min) * std::pow(lo_min, param);
        NumericPiece mid;
        mid.lo = lo_min;
        mid.hi = hi_max;
        mid.eval = [f, param](double t) { return hardy_Q(f, param, t); };
        out.numeric_pieces.push_back(std::move(mid));
        if (total > 0.0) out.power_pieces.push_back({0.0, lo_min, total, -param});
    }
    std::vector<Factor> factors;
    factors.emplace_back(std::move(out));
    return ProductFunction(f.domain(), std::move(factors));
}

ProbeReport hardy_norm_probe(OperatorTag op, const GrandSpace& space, double param,
                             int probe_levels) {
    if (probe_levels < 4)
        throw std::invalid_argument("hardy_norm_probe: probe_levels >= 4 required");
    if (!space.psi.representation())
        throw std::invalid_argument("hardy_norm_probe: the space needs a representation");
    if (space.domain.block_count() != 1 || space.domain.blocks[0].dim != 1 ||
        space.domain.blocks[0].kind != WeightKind::lebesgue)
        throw StructureError("hardy_norm_probe: single unweighted 1-D block required");

    const ProductFunction& rep = *space.psi.representation();
    ProbeReport report;
    for (int k = 1; k <= probe_levels; ++k) {
        const double n = std::pow(10.0, 6.0 * k);
        const ProductFunction fn = truncate(rep, n);
        const ProductFunction image = truncate(hardy_apply(op, fn, param), n);
        const double num = bgls_norm(space, image).log_value;
        const double den = bgls_norm(space, fn).log_value;
        report.ns.push_back(n);
        report.ratios.push_back(std::exp(num - den));
    }

    const std::size_t m = report.ratios.size();
    bool plateau = true, growth = true;
    for (std::size_t i = m - 3; i < m; ++i) {
        const double step = report.ratios[i] / report.ratios[i - 1];
        if (!(std::abs(step - 1.0) < 0.01)) plateau = false;
        if (!(step > 1.10)) growth = false;
    }
    report.flag = plateau ? ProbeReport::Flag::plateau
                          : (growth ? ProbeReport::Flag::growth
                                    : ProbeReport::Flag::inconclusive);
    return report;
}

}  // namespace bgls
