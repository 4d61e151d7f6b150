#include "bgls/function.hpp"

#include <algorithm>
#include <cmath>

namespace bgls {

namespace {

// log of int_lo^hi x^q dx, +inf when divergent. Written with expm1/log1p so
// that exponents within 1e-14 of the divergence edge still come out with full
// relative accuracy.
double log_power_integral(double lo, double hi, double q) {
    const double qp = q + 1.0;
    const bool from_zero = (lo == 0.0);
    const bool to_inf = std::isinf(hi);
    if (from_zero && to_inf) return kInf;
    if (from_zero) {
        if (qp <= 0.0) return kInf;
        return qp * std::log(hi) - std::log(qp);
    }
    if (to_inf) {
        if (qp >= 0.0) return kInf;
        return qp * std::log(lo) - std::log(-qp);
    }
    const double lr = std::log(hi / lo);
    if (qp == 0.0) return std::log(lr);
    const double r = qp * lr;
    if (qp > 0.0) {
        // hi^qp - lo^qp = lo^qp (e^r - 1), r > 0
        if (r > 700.0) return qp * std::log(hi) - std::log(qp);  // lo term negligible
        return qp * std::log(lo) + std::log(std::expm1(r)) - std::log(qp);
    }
    if (r < -700.0) return qp * std::log(lo) - std::log(-qp);
    return qp * std::log(lo) + std::log(-std::expm1(r)) - std::log(-qp);
}

struct PieceIntegral {
    double log_value = -kInf;
    double rel_error = 0.0;
    bool used_quadrature = false;
};

// Scan for the magnitude scale of log g over (lo, hi) so the quadrature
// integrand can be shifted into representable range.
double scan_log_peak(const std::function<double(double)>& log_g, double lo, double hi) {
    double peak = -kInf;
    const int n = 33;
    double glo = lo, ghi = hi;
    if (glo == 0.0) glo = (std::isinf(ghi) ? 1e-12 : ghi * 1e-12);
    if (std::isinf(ghi)) ghi = std::max(glo, 1.0) * 1e12;
    const double llo = std::log(glo), lhi = std::log(ghi);
    for (int i = 0; i < n; ++i) {
        const double x = std::exp(llo + (lhi - llo) * i / (n - 1.0));
        peak = std::max(peak, log_g(x));
    }
    return peak;
}

namespace {

// Integral of a peak-scaled, eventually decaying integrand over v in
// [0, inf), by doubling segments. The generic rational map crowds slow
// exponential tails (near-critical powers give rates as low as ~1e-16)
// into a boundary layer and exhausts the subdivision budget; doubling
// segments keep every piece smooth at its native scale, and the stop rule
// needs two consecutive shrinking, negligible segments.
QuadResult integrate_half_line(const std::function<double(double)>& f,
                               const QuadOptions& qopts) {
    QuadResult total;
    total.converged = true;
    QuadOptions seg_opts = qopts;
    seg_opts.max_intervals = std::max(qopts.max_intervals / 16, 512);
    double prev_seg = kInf;
    int negligible = 0;
    double lo = 0.0, hi = 1.0;
    for (int seg = 0; seg < 64; ++seg) {
        const QuadResult q = integrate(f, lo, hi, seg_opts);
        total.value += q.value;
        total.est_error += q.est_error;
        total.intervals += q.intervals;
        total.evaluations += q.evaluations;
        if (!q.converged) {
            total.converged = false;
            return total;
        }
        const double seg_abs = std::abs(q.value);
        if (seg_abs <= prev_seg &&
            seg_abs < 1e-12 * std::abs(total.value) + qopts.abs_tol) {
            if (++negligible >= 2) return total;
        } else {
            negligible = 0;
        }
        prev_seg = seg_abs;
        lo = hi;
        hi *= 2.0;
    }
    total.converged = false;
    return total;
}

}  // namespace

// Quadrature of exp(log_g(x)) over a piece, in log form. Infinite endpoints
// and the x -> 0 end are handled with exponential substitutions so that
// near-critical powers x^(-1+eta) stay cheap for any eta. When the caller
// can evaluate the integrand directly from log x it should pass log_g_lx:
// the substitutions then never materialize x, which keeps the mass beyond
// the double underflow floor (for eta = 1e-2 that mass is ~0.2% of a head
// piece) and avoids denormal noise that stalls the error estimator.
PieceIntegral quad_piece(const std::function<double(double)>& log_g, double lo, double hi,
                         const QuadOptions& qopts,
                         const std::function<double(double)>* log_g_lx = nullptr) {
    PieceIntegral out;
    out.used_quadrature = true;

    if (lo == 0.0 && std::isinf(hi)) {
        PieceIntegral a = quad_piece(log_g, 0.0, 1.0, qopts, log_g_lx);
        PieceIntegral b = quad_piece(log_g, 1.0, kInf, qopts, log_g_lx);
        out.log_value = log_sum_exp(a.log_value, b.log_value);
        out.rel_error = a.rel_error + b.rel_error;
        return out;
    }

    const double peak = scan_log_peak(log_g, lo, hi);
    if (peak == -kInf) return out;  // vanishes on the piece
    if (std::isinf(peak)) throw DivergenceError("quadrature: integrand unbounded on sample scan");

    // Substituted integrand at log x; the jacobian of x = e^{lx} is x itself.
    auto sub = [&log_g, log_g_lx, peak](double lx) {
        double lg;
        if (log_g_lx) {
            lg = (*log_g_lx)(lx);
        } else {
            const double x = std::exp(lx);
            lg = (x > 0.0 && std::isfinite(x)) ? log_g(x) : -kInf;
        }
        if (lg == -kInf) return 0.0;
        return std::exp(lg - peak + lx);
    };

    QuadResult q;
    if (lo == 0.0) {
        // x = hi e^{-v}: any near-critical power at 0 becomes a mild
        // exponential knee in v.
        const double lh = std::log(hi);
        q = integrate_half_line([&](double v) { return sub(lh - v); }, qopts);
    } else if (std::isinf(hi)) {
        // x = lo e^{v}.
        const double ll = std::log(lo);
        q = integrate_half_line([&](double v) { return sub(ll + v); }, qopts);
    } else if (hi > lo * 1e3) {
        // Wide finite box: linear nodes straddle the decades and can miss all
        // the mass near lo, so map to v-space the same way.
        const double lh = std::log(hi);
        q = integrate([&](double v) { return sub(lh - v); }, 0.0, lh - std::log(lo),
                      qopts);
    } else {
        q = integrate(
            [&](double x) {
                const double lg = log_g(x);
                return lg == -kInf ? 0.0 : std::exp(lg - peak);
            },
            lo, hi, qopts);
    }

    if (!q.converged) {
        const double partial = peak + std::log(std::max(q.value, 1e-300));
        throw ToleranceError("quadrature budget exhausted before tolerance", partial,
                             q.est_error);
    }
    out.log_value = (q.value > 0.0) ? peak + std::log(q.value) : -kInf;
    out.rel_error = (q.value > 0.0) ? q.est_error / q.value : 0.0;
    return out;
}

}  // namespace

double PowerPiece::eval(double x) const {
    if (!(x > lo && x <= hi)) return 0.0;
    return coef * std::pow(x, expnt);
}

double Factor1D::eval(double x) const {
    for (const auto& pp : power_pieces)
        if (x > pp.lo && x <= pp.hi) return pp.coef * std::pow(x, pp.expnt);
    for (const auto& np : numeric_pieces)
        if (x > np.lo && x <= np.hi) return np.eval(x);
    return 0.0;
}

namespace {

void validate_factor(const Factor1D& f) {
    struct Span {
        double lo, hi;
    };
    std::vector<Span> spans;
    for (const auto& pp : f.power_pieces) {
        if (!(pp.lo >= 0.0) || !(pp.hi > pp.lo))
            throw std::invalid_argument("PowerPiece: require 0 <= lo < hi");
        if (!(pp.coef > 0.0)) throw std::invalid_argument("PowerPiece: coef > 0 required");
        spans.push_back({pp.lo, pp.hi});
    }
    for (const auto& np : f.numeric_pieces) {
        if (!(np.lo >= 0.0) || !(np.hi > np.lo))
            throw std::invalid_argument("NumericPiece: require 0 <= lo < hi");
        if (!np.eval) throw std::invalid_argument("NumericPiece: evaluator missing");
        spans.push_back({np.lo, np.hi});
    }
    std::sort(spans.begin(), spans.end(), [](const Span& a, const Span& b) { return a.lo < b.lo; });
    for (std::size_t i = 0; i + 1 < spans.size(); ++i)
        if (spans[i + 1].lo < spans[i].hi * (1.0 - 1e-12) - 1e-300)
            throw std::invalid_argument("Factor1D: pieces overlap");
}

}  // namespace

ProductFunction::ProductFunction(WeightedDomain dom, std::vector<Factor> factors)
    : domain_(std::move(dom)), factors_(std::move(factors)) {
    if (factors_.size() != domain_.block_count())
        throw std::invalid_argument("ProductFunction: one factor per block required");
    for (std::size_t r = 0; r < factors_.size(); ++r) {
        const BlockSpec& blk = domain_.blocks[r];
        if (std::holds_alternative<Factor1D>(factors_[r])) {
            if (blk.dim != 1)
                throw std::invalid_argument("ProductFunction: piece factor on multi-dim block");
            validate_factor(std::get<Factor1D>(factors_[r]));
        } else {
            const auto& nd = std::get<FactorND>(factors_[r]);
            if (nd.dim != blk.dim)
                throw std::invalid_argument("ProductFunction: factor dim mismatch");
            if (!nd.eval) throw std::invalid_argument("FactorND: evaluator missing");
        }
    }
}

bool ProductFunction::analytic() const {
    for (const auto& f : factors_) {
        const auto* f1 = std::get_if<Factor1D>(&f);
        if (!f1 || !f1->analytic()) return false;
    }
    return true;
}

double ProductFunction::eval(std::span<const double> x) const {
    if (x.size() != factors_.size())
        throw std::invalid_argument("ProductFunction::eval: one coordinate per block");
    double v = 1.0;
    for (std::size_t r = 0; r < factors_.size(); ++r) {
        const auto* f1 = std::get_if<Factor1D>(&factors_[r]);
        if (!f1) throw StructureError("ProductFunction::eval: multi-dim factor");
        v *= f1->eval(x[r]);
    }
    return v;
}

double log_power_piece_lp(const PowerPiece& piece, double p, double wtheta, double wcoef) {
    const double q = piece.expnt * p + wtheta;
    const double li = log_power_integral(piece.lo, piece.hi, q);
    if (std::isinf(li) && li > 0) return kInf;
    return p * std::log(piece.coef) + std::log(wcoef) + li;
}

namespace {

// log of int |f_r|^p W over one 1-D block.
PieceIntegral factor_lp_1d(const Factor1D& f, const BlockSpec& blk, double p,
                           const LpOptions& opts) {
    PieceIntegral out;
    std::vector<double> logs;

    const bool analytic_weight =
        blk.kind == WeightKind::lebesgue || blk.kind == WeightKind::power;
    const double wtheta = (blk.kind == WeightKind::power) ? blk.theta : 0.0;
    const double wcoef = (blk.kind == WeightKind::power) ? blk.coef : 1.0;

    // Analytic route first: exact values and exact divergence detection.
    if (analytic_weight && !opts.force_quadrature) {
        for (const auto& pp : f.power_pieces) {
            const double lv = log_power_piece_lp(pp, p, wtheta, wcoef);
            if (std::isinf(lv) && lv > 0) {
                out.log_value = kInf;
                return out;
            }
            logs.push_back(lv);
        }
    } else {
        for (const auto& pp : f.power_pieces) {
            // Divergence is still decided in closed form; only the value goes
            // through quadrature.
            if (analytic_weight) {
                const double lv = log_power_piece_lp(pp, p, wtheta, wcoef);
                if (std::isinf(lv) && lv > 0) {
                    out.log_value = kInf;
                    return out;
                }
            }
            auto log_g = [&pp, &blk, p](double x) {
                const double fx = pp.coef * std::pow(x, pp.expnt);
                if (fx <= 0.0) return -kInf;
                const double w = blk.weight(x);
                if (w <= 0.0) return -kInf;
                return p * std::log(fx) + std::log(w);
            };
            std::function<double(double)> log_g_lx;
            if (analytic_weight && pp.coef > 0.0) {
                const double lc = std::log(pp.coef), lwc = std::log(wcoef);
                const double ex = pp.expnt, wt = wtheta;
                log_g_lx = [p, lc, lwc, ex, wt](double lx) {
                    return p * (lc + ex * lx) + wt * lx + lwc;
                };
            }
            PieceIntegral pi = quad_piece(log_g, pp.lo, pp.hi, opts.quad,
                                          log_g_lx ? &log_g_lx : nullptr);
            logs.push_back(pi.log_value);
            out.rel_error += pi.rel_error;
            out.used_quadrature = true;
        }
    }

    for (const auto& np : f.numeric_pieces) {
        auto log_g = [&np, &blk, p](double x) {
            const double fx = std::abs(np.eval(x));
            if (fx == 0.0) return -kInf;
            const double w = blk.weight(x);
            if (w <= 0.0) return -kInf;
            return p * std::log(fx) + std::log(w);
        };
        PieceIntegral pi = quad_piece(log_g, np.lo, np.hi, opts.quad);
        logs.push_back(pi.log_value);
        out.rel_error += pi.rel_error;
        out.used_quadrature = true;
    }

    out.log_value = log_sum_exp(logs);
    return out;
}

// Iterated quadrature for a block of dimension >= 2 (Lebesgue weight).
PieceIntegral factor_lp_nd(const FactorND& f, const BlockSpec& blk, double p,
                           const LpOptions& opts) {
    if (blk.kind != WeightKind::lebesgue)
        throw StructureError(
            "lp_norm: weighted multi-dimensional blocks carry scaling metadata only; "
            "fold the weight into the factor for norms");
    const double axis_lo = blk.half_space ? 0.0 : -kInf;

    std::vector<double> point(static_cast<std::size_t>(f.dim));
    std::function<double(int)> level = [&](int axis) -> double {
        QuadOptions q = opts.quad;
        // Inner integrals run tighter than the one that consumes them.
        q.rel_tol = opts.quad.rel_tol * std::pow(0.1, f.dim - 1 - axis);
        q.max_intervals = std::max(200, opts.quad.max_intervals >> (2 * (f.dim - 1 - axis)));
        auto integrand = [&](double x) -> double {
            point[static_cast<std::size_t>(axis)] = x;
            if (axis == 0) {
                const double fx = std::abs(f.eval(point));
                return (fx == 0.0) ? 0.0 : std::pow(fx, p);
            }
            return level(axis - 1);
        };
        QuadResult r = integrate(integrand, axis_lo, kInf, q);
        if (!r.converged && axis == f.dim - 1)
            throw ToleranceError("iterated quadrature budget exhausted", r.value, r.est_error);
        return r.value;
    };

    PieceIntegral out;
    out.used_quadrature = true;
    const double v = level(f.dim - 1);
    out.log_value = (v > 0.0) ? std::log(v) : -kInf;
    out.rel_error = opts.quad.rel_tol * 10.0;
    return out;
}

}  // namespace

LpResult lp_norm(const ProductFunction& f, double p, const LpOptions& opts) {
    if (!(p > 0.0) || !std::isfinite(p))
        throw std::invalid_argument("lp_norm: require finite p > 0");

    LpResult out;
    double log_total = 0.0;
    double rel_err = 0.0;
    bool any_quad = false, any_analytic = false;

    for (std::size_t r = 0; r < f.factors().size(); ++r) {
        const BlockSpec& blk = f.domain().blocks[r];
        PieceIntegral pi;
        if (const auto* f1 = std::get_if<Factor1D>(&f.factors()[r]))
            pi = factor_lp_1d(*f1, blk, p, opts);
        else
            pi = factor_lp_nd(std::get<FactorND>(f.factors()[r]), blk, p, opts);

        if (std::isinf(pi.log_value) && pi.log_value > 0) {
            out.value = kInf;
            out.log_value = kInf;
            out.method = LpMethod::analytic;
            return out;
        }
        log_total += pi.log_value;
        rel_err += pi.rel_error;
        (pi.used_quadrature ? any_quad : any_analytic) = true;
    }

    out.log_value = log_total / p;
    out.value = std::exp(out.log_value);
    out.est_error = rel_err / p + 1e-14;
    out.method = any_quad ? (any_analytic ? LpMethod::mixed : LpMethod::quadrature)
                          : LpMethod::analytic;
    return out;
}

ProductFunction scale_arg(const ProductFunction& f, std::span<const double> s) {
    if (s.size() != f.domain().block_count())
        throw std::invalid_argument("scale_arg: one scale per block required");
    for (double sr : s)
        if (!(sr > 0.0) || !std::isfinite(sr))
            throw std::invalid_argument("scale_arg: scales must be positive finite");

    std::vector<Factor> out;
    for (std::size_t r = 0; r < f.factors().size(); ++r) {
        const double sr = s[r];
        if (const auto* f1 = std::get_if<Factor1D>(&f.factors()[r])) {
            Factor1D g;
            for (const auto& pp : f1->power_pieces)
                g.power_pieces.push_back(
                    {pp.lo * sr, pp.hi * sr, pp.coef * std::pow(sr, -pp.expnt), pp.expnt});
            for (const auto& np : f1->numeric_pieces) {
                auto base = np.eval;
                g.numeric_pieces.push_back(
                    {np.lo * sr, np.hi * sr,
                     [base, sr](double x) { return base(x / sr); }});
            }
            out.emplace_back(std::move(g));
        } else {
            const auto& nd = std::get<FactorND>(f.factors()[r]);
            auto base = nd.eval;
            const int dim = nd.dim;
            FactorND g;
            g.dim = dim;
            g.eval = [base, sr, dim](std::span<const double> x) {
                std::vector<double> y(x.begin(), x.end());
                for (auto& c : y) c /= sr;
                return base(std::span<const double>(y.data(), y.size()));
            };
            out.emplace_back(std::move(g));
        }
    }
    return ProductFunction(f.domain(), std::move(out));
}

ProductFunction scale_arg(const ProductFunction& f, double s) {
    std::vector<double> sv(f.domain().block_count(), s);
    return scale_arg(f, sv);
}

namespace {

// Clip a power piece to (lo_box, hi_box) and cap its height at n.
void truncate_power_piece(const PowerPiece& pp, double lo_box, double hi_box, double n,
                          std::vector<PowerPiece>& out) {
    const double lo = std::max(pp.lo, lo_box);
    const double hi = std::min(pp.hi, hi_box);
    if (!(hi > lo)) return;
    if (pp.expnt == 0.0) {
        out.push_back({lo, hi, std::min(pp.coef, n), 0.0});
        return;
    }
    // coef x^e <= n  <=>  x <= (n/coef)^{1/e} for e > 0, x >= ... for e < 0
    const double x_cap = std::pow(n / pp.coef, 1.0 / pp.expnt);
    if (pp.expnt > 0.0) {
        if (x_cap >= hi) {
            out.push_back({lo, hi, pp.coef, pp.expnt});
        } else if (x_cap <= lo) {
            out.push_back({lo, hi, n, 0.0});
        } else {
            out.push_back({lo, x_cap, pp.coef, pp.expnt});
            out.push_back({x_cap, hi, n, 0.0});
        }
    } else {
        if (x_cap <= lo) {
            out.push_back({lo, hi, pp.coef, pp.expnt});
        } else if (x_cap >= hi) {
            out.push_back({lo, hi, n, 0.0});
        } else {
            out.push_back({lo, x_cap, n, 0.0});
            out.push_back({x_cap, hi, pp.coef, pp.expnt});
        }
    }
}

}  // namespace

ProductFunction truncate(const ProductFunction& f, double n) {
    if (!(n >= 1.0) || !std::isfinite(n))
        throw std::invalid_argument("truncate: require finite n >= 1");
    // n = 1 collapses the box to a null set; every factor comes out empty.
    const double lo_box = 1.0 / n, hi_box = n;

    std::vector<Factor> out;
    for (const auto& fac : f.factors()) {
        const auto* f1 = std::get_if<Factor1D>(&fac);
        if (!f1) throw StructureError("truncate: multi-dim factors not supported");
        Factor1D g;
        for (const auto& pp : f1->power_pieces)
            truncate_power_piece(pp, lo_box, hi_box, n, g.power_pieces);
        for (const auto& np : f1->numeric_pieces) {
            const double lo = std::max(np.lo, lo_box);
            const double hi = std::min(np.hi, hi_box);
            if (!(hi > lo)) continue;
            auto base = np.eval;
            g.numeric_pieces.push_back(
                {lo, hi, [base, n](double x) { return std::min(base(x), n); }});
        }
        out.emplace_back(std::move(g));
    }
    return ProductFunction(f.domain(), std::move(out));
}

ProductFunction indicator_of_measure(const WeightedDomain& dom, double delta) {
    if (!(delta > 0.0) || !std::isfinite(delta))
        throw std::invalid_argument("indicator_of_measure: require finite delta > 0");

    std::vector<Factor> out;
    for (std::size_t r = 0; r < dom.block_count(); ++r) {
        const BlockSpec& blk = dom.blocks[r];
        if (blk.dim != 1 || blk.kind == WeightKind::custom)
            throw std::invalid_argument(
                "indicator_of_measure: 1-D power/Lebesgue blocks required");
        const double m = (r == 0) ? delta : 1.0;
        double t;
        if (blk.kind == WeightKind::lebesgue)
            t = m;
        else
            t = std::pow((blk.theta + 1.0) * m / blk.coef, 1.0 / (blk.theta + 1.0));
        Factor1D g;
        g.power_pieces.push_back({0.0, t, 1.0, 0.0});
        out.emplace_back(std::move(g));
    }
    return ProductFunction(dom, std::move(out));
}

}  // namespace bgls
