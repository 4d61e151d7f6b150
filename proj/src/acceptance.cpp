#include "bgls/acceptance.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <random>
#include <string>
#include <vector>

#include "bgls/criteria.hpp"
#include "bgls/dilation.hpp"
#include "bgls/errors.hpp"
#include "bgls/grand.hpp"
#include "bgls/indices.hpp"

namespace bgls {

namespace {

std::string num(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.3g", v);
    return buf;
}

double rel_err(double x, double ref) {
    const double scale = std::max(std::abs(ref), 1e-300);
    return std::abs(x - ref) / scale;
}

// Tracks the largest error seen and where it occurred.
struct Worst {
    double err = -1.0;
    std::string where;
    void see(double e, const std::string& w) {
        if (e > err) {
            err = e;
            where = w;
        }
    }
    std::string str() const { return "worst " + num(err) + " at " + where; }
};

ProductFunction scale_coefficient(const ProductFunction& f, double c) {
    std::vector<Factor> factors = f.factors();
    auto* lead = std::get_if<Factor1D>(&factors.front());
    if (lead == nullptr) throw StructureError("scale_coefficient: piecewise lead factor required");
    for (auto& piece : lead->power_pieces) piece.coef *= c;
    for (auto& piece : lead->numeric_pieces) {
        auto base = piece.eval;
        piece.eval = [base, c](double x) { return c * base(x); };
    }
    return ProductFunction(f.domain(), std::move(factors));
}

// --- criterion 1 ------------------------------------------------------

CriterionResult criterion_equality() {
    CriterionResult r{1, "dilation norm equality on representation witnesses", false, ""};
    const Interval iv(2.0, 4.0);
    const double tol = 1e-3;
    int total = 0, good = 0;
    Worst worst;
    for (double theta : {0.0, 1.0}) {
        std::vector<BlockSpec> bs;
        bs.push_back(theta == 0.0 ? BlockSpec::lebesgue_block() : BlockSpec::power_block(theta));
        const WeightedDomain dom(bs);
        const PsiFunction psi = canonical_psi(iv, dom);
        for (int nu_kind = 0; nu_kind < 2; ++nu_kind) {
            const PsiFunction nu =
                nu_kind == 0 ? canonical_psi(iv, dom) : PsiFunction::constant(iv, 1.0);
            for (double s : {0.1, 0.5, 1.0, 2.0, 3.0, 10.0}) {
                const OperatorNormResult res = dilation_norm_empirical(psi, nu, dom, {s});
                const double err = rel_err(res.empirical_lower, res.closed_form);
                ++total;
                if (err <= tol) ++good;
                worst.see(err, "theta=" + num(theta) + " nu" + num(nu_kind) + " s=" + num(s));
            }
        }
    }
    r.passed = (good == total);
    r.detail = std::to_string(good) + "/" + std::to_string(total) + " within " + num(tol) +
               ", " + worst.str();
    return r;
}

// --- criterion 2 ------------------------------------------------------

CriterionResult criterion_upper_bound() {
    CriterionResult r{2, "dilation norm upper bound over a random function bank", false, ""};
    const Interval iv(2.0, 4.0);
    const WeightedDomain dom{};
    const PsiFunction psi = canonical_psi(iv, dom);
    const PsiFunction nu = canonical_psi(iv, dom);
    const GrandSpace source{dom, psi};
    const GrandSpace target{dom, multiply_psi(psi, nu)};
    const double slack = 1e-3;

    std::mt19937 rng(20260819u);
    std::uniform_real_distribution<double> U(0.0, 1.0);
    int total = 0, good = 0;
    double max_quotient = 0.0;  // empirical ratio / closed form, want <= 1 + slack
    for (int i = 0; i < 50; ++i) {
        const double x1 = 0.3 + 0.7 * U(rng);
        const double x2 = 1.0 + 2.0 * U(rng);
        // Head exponent above -1/b (kept off the critical value), tail below
        // -1/a, so |f|_p is finite across the whole exponent interval.
        const double e0 = -0.95 / iv.b + (0.3 + 0.95 / iv.b) * U(rng);
        const double e1 = -1.0 + 2.0 * U(rng);
        const double e2 = -2.0 + (2.0 - 1.05 / iv.a) * U(rng);
        const double c0 = 0.1 + 9.9 * U(rng);
        const double c1 = 0.1 + 9.9 * U(rng);
        const double c2 = 0.1 + 9.9 * U(rng);
        const double s = std::pow(10.0, -1.0 + 2.0 * U(rng));

        Factor1D fac;
        fac.power_pieces = {{0.0, x1, c0, e0}, {x1, x2, c1, e1}, {x2, kInf, c2, e2}};
        std::vector<Factor> factors;
        factors.emplace_back(std::move(fac));
        const ProductFunction f(dom, std::move(factors));

        const double closed = dilation_norm_closed_form(psi, nu, dom, {s});
        const SupOverP den = bgls_norm(source, f);
        const SupOverP numv = bgls_norm(target, scale_arg(f, s));
        const double ratio = std::exp(numv.log_value - den.log_value);
        ++total;
        if (ratio <= closed * (1.0 + slack)) ++good;
        max_quotient = std::max(max_quotient, ratio / closed);
    }
    r.passed = (good == total);
    r.detail = std::to_string(good) + "/" + std::to_string(total) +
               " ratios below the bound, max ratio/bound " + num(max_quotient);
    return r;
}

// --- criterion 3 ------------------------------------------------------

CriterionResult criterion_slope_limits() {
    CriterionResult r{3, "fundamental function slope limits 1/a and 1/b", false, ""};
    const WeightedDomain unit{};
    struct Case {
        std::string label;
        Interval iv;
        PsiFunction psi;
    };
    const std::vector<Case> cases = {
        {"(2,4)", Interval(2.0, 4.0), canonical_psi(Interval(2.0, 4.0), unit)},
        {"(1,3)", Interval(1.0, 3.0), canonical_psi(Interval(1.0, 3.0), unit)},
        {"(2,inf)", Interval(2.0, kInf),
         PsiFunction::power_formula(Interval(2.0, kInf), 1.0, 1.0 / 3.0, 4.0)},
        {"(1,inf)", Interval(1.0, kInf),
         PsiFunction::power_formula(Interval(1.0, kInf), 1.0, 0.0, 4.0)},
    };
    const double tol = 0.01;
    bool ok = true;
    Worst worst;
    for (const auto& c : cases) {
        const GrandSpace g{unit, c.psi};
        const FundFnSlopes sl = fundfn_slopes(g, 10);
        const double err_inf = rel_err(sl.at_inf, 1.0 / c.iv.a);
        // 1/b is zero on half-infinite intervals; absolute error there.
        const double err_zero =
            c.iv.b_infinite() ? std::abs(sl.at_zero) : rel_err(sl.at_zero, 1.0 / c.iv.b);
        if (err_inf > tol || err_zero > tol) ok = false;
        worst.see(err_inf, c.label + " toward inf");
        worst.see(err_zero, c.label + " toward zero");
    }
    r.passed = ok;
    r.detail = "4 intervals, slope tolerance " + num(tol) + ", " + worst.str();
    return r;
}

// --- criterion 4 ------------------------------------------------------

CriterionResult criterion_block_slopes() {
    CriterionResult r{4, "per-block dilation slope estimates", false, ""};
    const Interval iv(2.0, 4.0);
    const WeightedDomain carrier{};
    const PsiFunction psi = canonical_psi(iv, carrier);
    const PsiFunction nu = canonical_psi(iv, carrier);

    BlockSpec nd;
    nd.dim = 2;
    nd.theta = 1.0;
    nd.kind = WeightKind::power;

    struct Config {
        std::string label;
        std::vector<BlockSpec> blocks;
    };
    const std::vector<Config> configs = {
        {"d=(1) theta=(0)", {BlockSpec::lebesgue_block()}},
        {"d=(1) theta=(1)", {BlockSpec::power_block(1.0)}},
        {"d=(1,2) theta=(0,1)", {BlockSpec::lebesgue_block(), nd}},
    };
    const double tol = 0.02;
    bool ok = true;
    Worst worst;
    for (const auto& cfg : configs) {
        const WeightedDomain dom(cfg.blocks);
        const IndexReport rep = boyd_report(psi, nu, dom, 10);
        for (std::size_t j = 0; j < dom.block_count(); ++j) {
            const double ord = dom.blocks[j].order();
            const double e_up = rel_err(rep.per_block[j].first, ord / iv.a);
            const double e_lo = rel_err(rep.per_block[j].second, ord / iv.b);
            if (e_up > tol || e_lo > tol) ok = false;
            worst.see(e_up, cfg.label + " block " + std::to_string(j) + " upper");
            worst.see(e_lo, cfg.label + " block " + std::to_string(j) + " lower");
        }
    }
    r.passed = ok;
    r.detail = "3 block configurations, tolerance " + num(tol) + ", " + worst.str();
    return r;
}

// --- criterion 5 ------------------------------------------------------

CriterionResult criterion_shimogaki() {
    CriterionResult r{5, "Shimogaki indices and the Boyd sandwich", false, ""};
    const WeightedDomain unit{};
    const double tol = 0.02;
    bool ok = true;
    Worst worst;
    std::string chains;
    for (const Interval& iv : {Interval(2.0, 4.0), Interval(1.0, 3.0), Interval(1.0, 2.0)}) {
        const GrandSpace g{unit, canonical_psi(iv, unit)};
        const ShimogakiReport rep = shimogaki_indices(g, 8);
        const double e_minus = rel_err(rep.beta_minus, 1.0 / iv.b);
        const double e_plus = rel_err(rep.beta_plus, 1.0 / iv.a);
        if (e_minus > tol || e_plus > tol) ok = false;
        worst.see(e_minus, iv.str() + " beta-");
        worst.see(e_plus, iv.str() + " beta+");

        const SandwichReport sw = sandwich_check(g);
        if (!sw.holds) {
            ok = false;
            chains += " sandwich violated on " + iv.str();
        }
    }
    r.passed = ok;
    r.detail = "3 intervals, tolerance " + num(tol) + ", " + worst.str() + chains;
    return r;
}

// --- criterion 6 ------------------------------------------------------

CriterionResult criterion_matrix() {
    CriterionResult r{6, "matrix dilation determinant law and norm", false, ""};
    const Interval iv(2.0, 4.0);
    const WeightedDomain carrier{};
    const PsiFunction psi = canonical_psi(iv, carrier);
    const PsiFunction nu = canonical_psi(iv, carrier);
    bool ok = true;
    Worst worst;

    // |D_A f|_p^p = |det A| |f|_p^p, diagonal A, closed-form integrals.
    {
        const WeightedDomain dom2(
            {BlockSpec::lebesgue_block(), BlockSpec::lebesgue_block()});
        Factor1D fa;
        fa.power_pieces = {{0.0, 1.0, 1.0, -0.1}, {1.0, kInf, 1.0, -0.8}};
        Factor1D fb;
        fb.power_pieces = {{0.0, 2.0, 1.5, 0.2}};
        std::vector<Factor> factors;
        factors.emplace_back(fa);
        factors.emplace_back(fb);
        const ProductFunction f(dom2, std::move(factors));
        const Matrix A = Matrix::diagonal({2.0, 3.0});
        const ProductFunction Df = apply_dilation(DilationSpec::matrix_dilation(A), f);
        for (double p : {2.2, 3.0, 3.7}) {
            const LpResult base = lp_norm(f, p);
            const LpResult moved = lp_norm(Df, p);
            const double err =
                std::abs(std::expm1(p * moved.log_value -
                                    (std::log(6.0) + p * base.log_value)));
            if (err > 1e-10) ok = false;
            worst.see(err, "determinant law p=" + num(p));
        }
    }

    // Operator norm equals phi(G(nu), |det A|) on the representation.
    {
        const OperatorNormResult res =
            matrix_dilation_norm(psi, nu, Matrix::diagonal({2.0, 3.0}));
        const double err = rel_err(res.empirical_lower, res.closed_form);
        if (err > 1e-3 || res.relation != NormRelation::equality_expected) ok = false;
        worst.see(err, "norm vs phi(det)");
    }

    // Slopes of phi against the determinant recover (1/a, 1/b).
    {
        const auto [up, lo] = matrix_boyd_limits(psi, nu, 10);
        const double e_up = rel_err(up, 1.0 / iv.a);
        const double e_lo = rel_err(lo, 1.0 / iv.b);
        if (e_up > 0.02 || e_lo > 0.02) ok = false;
        worst.see(e_up, "det-slope upper");
        worst.see(e_lo, "det-slope lower");
    }

    // Non-diagonal Jacobian through quadrature: A = 2 * rotation(pi/6).
    {
        const WeightedDomain gdom({BlockSpec::lebesgue_block(2, false)});
        FactorND gauss;
        gauss.dim = 2;
        gauss.eval = [](std::span<const double> x) {
            return std::exp(-(x[0] * x[0] + x[1] * x[1]));
        };
        std::vector<Factor> factors;
        factors.emplace_back(gauss);
        const ProductFunction g(gdom, std::move(factors));
        const double rt3 = std::sqrt(3.0);
        const Matrix A(2, {rt3, -1.0, 1.0, rt3});  // det 4, operator norm 2
        const ProductFunction Dg = apply_dilation(DilationSpec::matrix_dilation(A), g);
        LpOptions lo;
        lo.quad.rel_tol = 1e-9;
        const double p = 2.5;
        const LpResult base = lp_norm(g, p, lo);
        const LpResult moved = lp_norm(Dg, p, lo);
        const double err = std::abs(
            std::expm1(moved.log_value - (std::log(4.0) / p + base.log_value)));
        if (err > 1e-5) ok = false;
        worst.see(err, "rotated Gaussian Jacobian");
    }

    r.passed = ok;
    r.detail = worst.str();
    return r;
}

// --- criterion 7 ------------------------------------------------------

CriterionResult criterion_operators() {
    CriterionResult r{7, "operator boundedness verdicts, Hardy values, growth probes",
                      false, ""};
    bool ok = true;
    std::string issues;

    struct VerdictRow {
        Interval iv;
        bool P, Q, M, H, F;
    };
    const std::vector<VerdictRow> table = {
        {Interval(1.0, 2.0), false, true, false, false, false},
        {Interval(2.0, 4.0), true, false, true, true, true},
        {Interval(1.0, kInf), false, false, false, false, false},
        {Interval(2.0, kInf), true, false, true, false, false},
    };
    for (const auto& row : table) {
        const bool p = boundedness(OperatorTag::P_alpha, row.iv, {{"alpha", 0.6}}).bounded;
        const bool q = boundedness(OperatorTag::Q_beta, row.iv, {{"beta", 0.3}}).bounded;
        const bool m = boundedness(OperatorTag::maximal, row.iv).bounded;
        const bool h = boundedness(OperatorTag::hilbert, row.iv).bounded;
        const bool f = boundedness(OperatorTag::fourier, row.iv).bounded;
        if (p != row.P || q != row.Q || m != row.M || h != row.H || f != row.F) {
            ok = false;
            issues += " verdict mismatch on " + row.iv.str();
        }
    }

    // Closed-form averages on power shapes.
    const WeightedDomain unit{};
    auto one_piece = [&unit](double lo, double hi, double e) {
        Factor1D fac;
        fac.power_pieces = {{lo, hi, 1.0, e}};
        std::vector<Factor> fs;
        fs.emplace_back(std::move(fac));
        return ProductFunction(unit, std::move(fs));
    };
    const ProductFunction head = one_piece(0.0, 1.0, -0.3);
    const ProductFunction ind = one_piece(0.0, 1.0, 0.0);
    const ProductFunction tail = one_piece(1.0, kInf, -0.8);
    Worst hw;
    hw.see(rel_err(hardy_P(head, 0.6, 0.7), std::pow(0.7, -0.3) / 0.3), "P head inside");
    hw.see(rel_err(hardy_P(ind, 0.6, 0.5), 1.0 / 0.6), "P indicator inside");
    hw.see(rel_err(hardy_P(ind, 0.6, 2.0), std::pow(2.0, -0.6) / 0.6), "P indicator beyond");
    hw.see(rel_err(hardy_Q(tail, 0.5, 2.0), std::pow(2.0, -0.8) / 0.3), "Q tail inside");
    hw.see(rel_err(hardy_Q(tail, 0.5, 0.5), std::pow(0.5, -0.5) / 0.3), "Q tail before");
    if (hw.err > 1e-10) {
        ok = false;
        issues += " Hardy closed-form error " + num(hw.err);
    }
    bool threw = false;
    try {
        (void)hardy_P(head, 0.2, 0.7);
    } catch (const DivergenceError&) {
        threw = true;
    }
    if (!threw) {
        ok = false;
        issues += " missing divergence (P)";
    }
    threw = false;
    try {
        (void)hardy_Q(tail, 0.9, 2.0);
    } catch (const DivergenceError&) {
        threw = true;
    }
    if (!threw) {
        ok = false;
        issues += " missing divergence (Q)";
    }

    // Probe flags must line up with the verdicts.
    struct ProbeCase {
        Interval iv;
        OperatorTag op;
        double param;
    };
    const std::vector<ProbeCase> probes = {
        {Interval(2.0, 4.0), OperatorTag::P_alpha, 0.7},
        {Interval(2.0, 4.0), OperatorTag::P_alpha, 0.3},
        {Interval(2.0, 4.0), OperatorTag::Q_beta, 0.1},
        {Interval(2.0, 4.0), OperatorTag::Q_beta, 0.5},
        {Interval(1.0, 2.0), OperatorTag::P_alpha, 0.75},
        {Interval(1.0, 2.0), OperatorTag::Q_beta, 0.25},
        {Interval(1.0, 2.0), OperatorTag::Q_beta, 0.7},
    };
    int agreed = 0;
    for (const auto& pc : probes) {
        const GrandSpace space{unit, canonical_psi(pc.iv, unit)};
        const std::string key = pc.op == OperatorTag::P_alpha ? "alpha" : "beta";
        const bool bounded = boundedness(pc.op, pc.iv, {{key, pc.param}}).bounded;
        const ProbeReport probe = hardy_norm_probe(pc.op, space, pc.param, 12);
        const auto expect =
            bounded ? ProbeReport::Flag::plateau : ProbeReport::Flag::growth;
        if (probe.flag == expect) {
            ++agreed;
        } else {
            ok = false;
            issues += " probe disagrees: " + to_string(pc.op) + " " + num(pc.param) +
                      " on " + pc.iv.str() + " -> " + to_string(probe.flag);
        }
    }

    r.passed = ok;
    r.detail = "20 verdicts exact, Hardy worst " + num(hw.err) + ", probes " +
               std::to_string(agreed) + "/7" + issues;
    return r;
}

// --- criterion 8 ------------------------------------------------------

CriterionResult criterion_structure() {
    CriterionResult r{8, "norm structure: homogeneity, triangle, monotone limits",
                      false, ""};
    bool ok = true;
    std::string issues;
    const WeightedDomain unit{};
    const Interval iv24(2.0, 4.0);
    const PsiFunction psi24 = canonical_psi(iv24, unit);
    const GrandSpace g24{unit, psi24};
    const ProductFunction rep24 = *psi24.representation();

    // Homogeneity ||c f|| = c ||f||.
    {
        Worst w;
        const SupOverP base = bgls_norm(g24, rep24);
        for (double c : {1e-3, 3.0, 1e6}) {
            const SupOverP scaled = bgls_norm(g24, scale_coefficient(rep24, c));
            w.see(std::abs(std::expm1(scaled.log_value - std::log(c) - base.log_value)),
                  "c=" + num(c));
        }
        if (w.err > 1e-12) {
            ok = false;
            issues += " homogeneity " + w.str();
        }
    }

    // Triangle inequality on 200 random pairs; 190 with disjoint supports
    // stay closed-form, 10 overlapping ones run through quadrature.
    {
        std::mt19937 rng(777u);
        std::uniform_real_distribution<double> U(0.0, 1.0);
        int bad = 0;
        for (int i = 0; i < 200; ++i) {
            const bool overlapping = (i >= 190);
            PowerPiece pf, pg;
            if (overlapping) {
                pf = {0.5, 2.0, 0.1 + 9.9 * U(rng), -1.0 + 2.0 * U(rng)};
                pg = {0.5, 2.0, 0.1 + 9.9 * U(rng), -1.0 + 2.0 * U(rng)};
            } else {
                const double u = 0.5 + 1.5 * U(rng);
                const double v = u + 0.5 + 2.5 * U(rng);
                pf = {0.0, u, 0.1 + 9.9 * U(rng), -0.2 + 0.7 * U(rng)};
                pg = {u, v, 0.1 + 9.9 * U(rng), -1.0 + 2.0 * U(rng)};
            }
            Factor1D ff, fg;
            ff.power_pieces = {pf};
            fg.power_pieces = {pg};
            std::vector<Factor> vf, vg;
            vf.emplace_back(ff);
            vg.emplace_back(fg);
            const ProductFunction f(unit, std::move(vf));
            const ProductFunction g(unit, std::move(vg));

            Factor1D fsum;
            if (overlapping) {
                NumericPiece np;
                np.lo = 0.5;
                np.hi = 2.0;
                np.eval = [pf, pg](double x) { return pf.eval(x) + pg.eval(x); };
                fsum.numeric_pieces = {np};
            } else {
                fsum.power_pieces = {pf, pg};
            }
            std::vector<Factor> vs;
            vs.emplace_back(std::move(fsum));
            const ProductFunction sum(unit, std::move(vs));

            const double nf = bgls_norm(g24, f).value;
            const double ng = bgls_norm(g24, g).value;
            const double ns = bgls_norm(g24, sum).value;
            if (!(ns <= (nf + ng) * (1.0 + 1e-6))) ++bad;
        }
        if (bad > 0) {
            ok = false;
            issues += " triangle violated on " + std::to_string(bad) + "/200";
        }
    }

    // Monotone truncation limits.
    {
        const std::vector<int> ns = {2, 4, 8, 16, 32, 64};
        const Interval iv13(1.0, 3.0);
        const PsiFunction psi13 = canonical_psi(iv13, unit);
        const GrandSpace g13{unit, psi13};
        Factor1D det3;
        det3.power_pieces = {
            {0.0, 0.6, 2.0, -0.15}, {0.6, 1.7, 0.8, 0.4}, {1.7, kInf, 1.2, -0.9}};
        std::vector<Factor> vdet;
        vdet.emplace_back(std::move(det3));
        const ProductFunction f3(unit, std::move(vdet));

        struct FatouCase {
            const GrandSpace* space;
            const ProductFunction* f;
            const char* label;
        };
        const ProductFunction rep13 = *psi13.representation();
        const std::vector<FatouCase> cases = {
            {&g24, &rep24, "rep(2,4)"}, {&g13, &rep13, "rep(1,3)"}, {&g24, &f3, "3-piece"}};
        for (const auto& c : cases) {
            const FatouReport rep =
                fatou_check(*c.space, *c.f, ns, default_norm_options(*c.f));
            if (!rep.monotone || !rep.below_limit || !(rep.final_gap_ratio <= 0.15)) {
                ok = false;
                issues += std::string(" monotone-limit failure on ") + c.label +
                          " (gap " + num(rep.final_gap_ratio) + ")";
            }
        }
    }

    // phi nondecreasing, phi(delta)/delta nonincreasing.
    {
        for (const Interval& iv : {Interval(2.0, 4.0), Interval(1.0, 3.0)}) {
            const GrandSpace g{unit, canonical_psi(iv, unit)};
            double prev_phi = -kInf, prev_ratio = kInf;
            bool mono = true;
            for (int i = 0; i < 25; ++i) {
                const double ld = (-6.0 + 0.5 * i) * std::log(10.0);
                const double lphi =
                    fundamental_function_log(g, ld, SupOptions::standard()).log_value;
                if (lphi < prev_phi - 1e-9) mono = false;
                if (lphi - ld > prev_ratio + 1e-9) mono = false;
                prev_phi = lphi;
                prev_ratio = lphi - ld;
            }
            if (!mono) {
                ok = false;
                issues += " phi monotonicity failed on " + iv.str();
            }
        }
    }

    // phi(0+) = 0 exactly for the blow-up class; constant control stays up.
    {
        const std::vector<PsiFunction> vanish = {
            canonical_psi(Interval(2.0, 4.0), unit),
            canonical_psi(Interval(1.0, 3.0), unit),
            PsiFunction::power_formula(Interval(2.0, 4.0), 4.0, 0.0, 2.0),
            PsiFunction::power_formula(Interval(1.0, kInf), 1.0, 0.0, 4.0),
        };
        for (const auto& psi : vanish) {
            if (!fundfn_vanishes_at_zero(GrandSpace{unit, psi})) {
                ok = false;
                issues += " phi(0+) did not vanish for " + psi.describe();
            }
        }
        if (fundfn_vanishes_at_zero(
                GrandSpace{unit, PsiFunction::constant(Interval(1.0, kInf), 1.0)})) {
            ok = false;
            issues += " constant-weight control vanished";
        }
    }

    r.passed = ok;
    r.detail = ok ? "homogeneity 1e-12, triangle 200/200, limits and phi shape hold"
                  : issues;
    return r;
}

// --- criterion 9 ------------------------------------------------------

CriterionResult criterion_oracle_agreement() {
    CriterionResult r{9, "analytic and quadrature norm agreement", false, ""};
    const WeightedDomain unit{};
    const WeightedDomain wdom({BlockSpec::power_block(1.0)});
    const WeightedDomain dom2({BlockSpec::lebesgue_block(), BlockSpec::power_block(1.0)});

    Factor1D det3;
    det3.power_pieces = {{0.0, 0.6, 2.0, -0.15}, {0.6, 1.7, 0.8, 0.4}, {1.7, kInf, 1.2, -0.9}};
    Factor1D pa;
    pa.power_pieces = {{0.0, 1.0, 1.0, -0.2}, {1.0, kInf, 1.0, -0.7}};
    Factor1D pb;
    pb.power_pieces = {{0.0, 2.0, 1.0, 0.3}};

    struct Case {
        std::string label;
        Interval iv;
        ProductFunction f;
    };
    std::vector<Case> cases;
    cases.push_back({"rep(2,4)", Interval(2.0, 4.0),
                     *canonical_psi(Interval(2.0, 4.0), unit).representation()});
    cases.push_back({"rep(1,3)", Interval(1.0, 3.0),
                     *canonical_psi(Interval(1.0, 3.0), unit).representation()});
    {
        std::vector<Factor> v;
        v.emplace_back(det3);
        cases.push_back({"3-piece", Interval(2.0, 4.0), ProductFunction(unit, std::move(v))});
    }
    cases.push_back({"rep(2,4) weighted", Interval(2.0, 4.0),
                     *canonical_psi(Interval(2.0, 4.0), wdom).representation()});
    {
        std::vector<Factor> v;
        v.emplace_back(pa);
        v.emplace_back(pb);
        cases.push_back({"2-block", Interval(2.0, 4.0), ProductFunction(dom2, std::move(v))});
    }

    bool ok = true;
    Worst worst;
    int points = 0;
    for (const auto& c : cases) {
        for (int k = 0; k < 7; ++k) {
            const double uk = std::cos(M_PI * (2.0 * k + 1.0) / 14.0);
            const double p = 0.5 * (c.iv.a + c.iv.b) + 0.5 * (c.iv.b - c.iv.a) * 0.99 * uk;
            const LpResult la = lp_norm(c.f, p);
            LpOptions qo;
            qo.force_quadrature = true;
            const LpResult lq = lp_norm(c.f, p, qo);
            const double diff = std::abs(std::expm1(la.log_value - lq.log_value));
            const double tol = std::max(la.est_error + lq.est_error, 1e-7);
            ++points;
            if (diff > tol) ok = false;
            worst.see(diff / std::max(tol, 1e-300), c.label + " p=" + num(p));
        }
    }
    r.passed = ok;
    r.detail = std::to_string(points) + " comparisons, worst error/tolerance " +
               num(worst.err) + " at " + worst.where;
    return r;
}

}  // namespace

std::vector<CriterionResult> run_acceptance(std::ostream& os) {
    using Fn = CriterionResult (*)();
    const Fn criteria[] = {
        criterion_equality,      criterion_upper_bound, criterion_slope_limits,
        criterion_block_slopes,  criterion_shimogaki,   criterion_matrix,
        criterion_operators,     criterion_structure,   criterion_oracle_agreement,
    };
    std::vector<CriterionResult> results;
    for (Fn fn : criteria) {
        CriterionResult res;
        try {
            res = fn();
        } catch (const std::exception& e) {
            res.id = static_cast<int>(results.size()) + 1;
            res.name = "criterion aborted";
            res.passed = false;
            res.detail = std::string("exception: ") + e.what();
        }
        os << (res.passed ? "[PASS]" : "[FAIL]") << " criterion " << res.id << ": "
           << res.name << " (" << res.detail << ")\n";
        os.flush();
        results.push_back(std::move(res));
    }
    return results;
}

bool all_passed(const std::vector<CriterionResult>& results) {
    for (const auto& res : results)
        if (!res.passed) return false;
    return !results.empty();
}

}  // namespace bgls
