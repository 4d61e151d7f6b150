#include "bgls/dilation.hpp"

#include <algorithm>
#include <cmath>
#include <variant>

#include "bgls/errors.hpp"
#include "bgls/numerics.hpp"

namespace bgls {

DilationSpec DilationSpec::vector(std::vector<double> s) {
    DilationSpec spec;
    spec.kind = DilationKind::vector_scale;
    spec.s = std::move(s);
    spec.validate();
    return spec;
}

DilationSpec DilationSpec::matrix_dilation(Matrix A) {
    DilationSpec spec;
    spec.kind = DilationKind::matrix;
    spec.A = std::move(A);
    spec.validate();
    return spec;
}

DilationSpec DilationSpec::weighted_matrix(Matrix A, double sigma) {
    DilationSpec spec;
    spec.kind = DilationKind::matrix_weighted;
    spec.A = std::move(A);
    spec.sigma = sigma;
    spec.validate();
    return spec;
}

void DilationSpec::validate() const {
    if (kind == DilationKind::vector_scale) {
        if (s.empty()) throw std::invalid_argument("DilationSpec: empty scale vector");
        for (double v : s)
            if (!(v > 0.0) || !std::isfinite(v))
                throw std::invalid_argument("DilationSpec: scales must be positive finite");
        return;
    }
    if (A.size() == 0) throw std::invalid_argument("DilationSpec: matrix missing");
    if (A.det() == 0.0) throw StructureError("DilationSpec: singular matrix");
}

namespace {

bool diagonal_positive(const Matrix& A) {
    if (!A.is_diagonal()) return false;
    for (double d : A.diagonal_entries())
        if (!(d > 0.0)) return false;
    return true;
}

ProductFunction apply_matrix(const Matrix& A, const ProductFunction& f) {
    const WeightedDomain& dom = f.domain();
    const std::size_t d = A.size();

    // Positive diagonal on an all-1-D domain: exactly the vector dilation.
    if (diagonal_positive(A) && dom.all_one_dim() && dom.block_count() == d)
        return scale_arg(f, std::span<const double>(A.diagonal_entries()));

    if (dom.block_count() != 1 ||
        static_cast<std::size_t>(dom.blocks[0].dim) != d)
        throw StructureError("apply_dilation: matrix size does not match the domain");
    if (dom.blocks[0].kind != WeightKind::lebesgue)
        throw StructureError("apply_dilation: matrix dilation needs a Lebesgue block");
    const bool diag_pos = diagonal_positive(A);
    if (!diag_pos && dom.blocks[0].half_space)
        throw StructureError(
            "apply_dilation: non-diagonal matrix does not preserve the positive cone; "
            "use a full-space block");
    const FactorND* g = std::get_if<FactorND>(&f.factors()[0]);
    if (g == nullptr)
        throw StructureError(
            "apply_dilation: non-diagonal matrix breaks piecewise-power product "
            "structure; provide a numeric-evaluator factor");

    const Matrix inv = A.inverse();
    FactorND out;
    out.dim = g->dim;
    out.eval = [inv, inner = g->eval](std::span<const double> x) {
        const std::vector<double> y = inv.apply(std::vector<double>(x.begin(), x.end()));
        return inner(std::span<const double>(y));
    };
    std::vector<Factor> factors;
    factors.emplace_back(std::move(out));
    return ProductFunction(dom, std::move(factors));
}

}  // namespace

ProductFunction apply_dilation(const DilationSpec& spec, const ProductFunction& f) {
    spec.validate();
    if (spec.kind == DilationKind::vector_scale) {
        if (spec.s.size() != f.domain().block_count())
            throw std::invalid_argument("apply_dilation: one scale per block required");
        return scale_arg(f, std::span<const double>(spec.s));
    }
    return apply_matrix(spec.A, f);
}

namespace {

void check_intervals(const PsiFunction& psi, const PsiFunction& nu) {
    if (!(psi.interval() == nu.interval()))
        throw std::invalid_argument("dilation norm: psi and nu must share the interval, got " +
                                    psi.interval().str() + " vs " + nu.interval().str());
}

// phi(G(nu), exp(log_arg)); measure-independent, so any valid domain works
// for the underlying space object.
SupOverP phi_of(const PsiFunction& nu, double log_arg) {
    GrandSpace carrier{WeightedDomain{}, nu};
    SupOptions opts = SupOptions::standard();
    opts.keep_profile = false;
    return fundamental_function_log(carrier, log_arg, opts);
}

}  // namespace

SupOverP dilation_norm_closed_form_sup(const PsiFunction& psi, const PsiFunction& nu,
                                       const WeightedDomain& domain,
                                       const std::vector<double>& s) {
    check_intervals(psi, nu);
    if (s.size() != domain.block_count())
        throw std::invalid_argument("dilation norm: one scale per block required");
    return phi_of(nu, log_measure_scaling_factor(domain, s));
}

double dilation_norm_closed_form(const PsiFunction& psi, const PsiFunction& nu,
                                 const WeightedDomain& domain,
                                 const std::vector<double>& s) {
    return dilation_norm_closed_form_sup(psi, nu, domain, s).value;
}

namespace {

// Integrable two-sided power shapes used as lower-bound witnesses when no
// representation is available. gamma_head scales the head exponent away
// from its critical value, gamma_tail steepens the tail past its one.
ProductFunction bank_witness(const WeightedDomain& dom, const Interval& iv,
                             double gamma_head, double gamma_tail) {
    const BlockSpec& first = dom.blocks.front();
    if (first.dim != 1 || first.kind == WeightKind::custom)
        throw StructureError("dilation norm: witness bank needs a 1-D power/Lebesgue "
                             "first block");
    const double theta = (first.kind == WeightKind::power) ? first.theta : 0.0;
    const double head = iv.b_infinite() ? 0.0 : -gamma_head * (1.0 + theta) / iv.b;
    const double tail = -(1.0 + theta) / (gamma_tail * iv.a);

    std::vector<Factor> factors;
    Factor1D lead;
    lead.power_pieces.push_back({0.0, 1.0, 1.0, head});
    if (gamma_tail > 0.0) lead.power_pieces.push_back({1.0, kInf, 1.0, tail});
    factors.emplace_back(std::move(lead));
    for (std::size_t r = 1; r < dom.block_count(); ++r) {
        if (dom.blocks[r].dim != 1)
            throw StructureError("dilation norm: witness bank needs 1-D blocks");
        Factor1D ind;
        ind.power_pieces.push_back({0.0, 1.0, 1.0, 0.0});
        factors.emplace_back(std::move(ind));
    }
    return ProductFunction(dom, std::move(factors));
}

double witness_log_ratio(const GrandSpace& source, const GrandSpace& target,
                         const std::vector<double>& s, const ProductFunction& w,
                         const std::optional<NormOptions>& opts) {
    const NormOptions o = opts ? *opts : default_norm_options(w);
    const SupOverP den = bgls_norm(source, w, o);
    if (den.diverged || !(den.log_value > -kInf)) return -kInf;
    const SupOverP num = bgls_norm(target, apply_dilation(DilationSpec::vector(s), w), o);
    if (num.diverged) return kInf;
    return num.log_value - den.log_value;
}

}  // namespace

OperatorNormResult dilation_norm_empirical(const PsiFunction& psi, const PsiFunction& nu,
                                           const WeightedDomain& domain,
                                           const std::vector<double>& s,
                                           const std::optional<NormOptions>& opts) {
    check_intervals(psi, nu);
    const SupOverP closed = dilation_norm_closed_form_sup(psi, nu, domain, s);

    OperatorNormResult out;
    out.closed_form = closed.value;
    out.log_closed_form = closed.log_value;
    out.log_scale_factor = log_measure_scaling_factor(domain, s);

    const GrandSpace source{domain, psi};
    const GrandSpace target{domain, multiply_psi(psi, nu)};

    double best = -kInf;
    if (psi.representation()) {
        best = witness_log_ratio(source, target, s, *psi.representation(), opts);
        out.relation = NormRelation::equality_expected;
    } else {
        const Interval& iv = psi.interval();
        const double bank[][2] = {{0.0, 0.9}, {0.7, 0.8}, {0.95, 0.95}, {0.5, -1.0}};
        for (const auto& g : bank) {
            const ProductFunction w = bank_witness(domain, iv, g[0], g[1]);
            best = std::max(best, witness_log_ratio(source, target, s, w, opts));
        }
        out.relation = NormRelation::upper_bound_only;
    }
    out.log_empirical_lower = best;
    out.empirical_lower = std::exp(best);
    return out;
}

OperatorNormResult matrix_dilation_norm(const PsiFunction& psi, const PsiFunction& nu,
                                        const Matrix& A, std::optional<double> sigma,
                                        const std::optional<NormOptions>& opts) {
    check_intervals(psi, nu);
    const double adet = std::abs(A.det());
    if (adet == 0.0) throw StructureError("matrix_dilation_norm: singular matrix");

    double log_arg = std::log(adet);
    if (sigma) log_arg += *sigma * std::log(A.spectral_norm());

    OperatorNormResult out;
    out.log_scale_factor = log_arg;
    const SupOverP closed = phi_of(nu, log_arg);
    out.closed_form = closed.value;
    out.log_closed_form = closed.log_value;

    const bool scaled_orth = A.scaled_orthogonal_factor().has_value();
    const bool has_rep = static_cast<bool>(psi.representation());
    const bool equality = sigma ? (scaled_orth && has_rep) : has_rep;
    out.relation = equality ? NormRelation::equality_expected : NormRelation::upper_bound_only;

    if (equality) {
        // The scalar dilation with the same measure factor shares the
        // extremal witness, so the ratio is evaluated through it.
        const ProductFunction& rep = *psi.representation();
        const WeightedDomain& rdom = rep.domain();
        std::vector<double> sv(rdom.block_count(), 1.0);
        sv[0] = std::exp(log_arg / rdom.blocks[0].order());
        const GrandSpace source{rdom, psi};
        const GrandSpace target{rdom, multiply_psi(psi, nu)};
        out.log_empirical_lower = witness_log_ratio(source, target, sv, rep, opts);
    } else if (!sigma || scaled_orth) {
        // Indicator witnesses: images of sets scale their measure by
        // exactly exp(log_arg) in these cases, giving the ratio of the two
        // fundamental functions over a grid of set measures.
        GrandSpace src_carrier{WeightedDomain{}, psi};
        GrandSpace tgt_carrier{WeightedDomain{}, multiply_psi(psi, nu)};
        SupOptions sopt = SupOptions::reduced();
        sopt.keep_profile = false;
        double best = -kInf;
        for (int i = 0; i <= 32; ++i) {
            const double log_m = (-8.0 + 0.5 * i) * std::log(10.0);
            const double num =
                fundamental_function_log(tgt_carrier, log_arg + log_m, sopt).log_value;
            const double den = fundamental_function_log(src_carrier, log_m, sopt).log_value;
            best = std::max(best, num - den);
        }
        out.log_empirical_lower = best;
    } else {
        // General matrix under the radial weight: no exact image measure is
        // available, and the bound is not claimed sharp. No witness value.
        out.log_empirical_lower = -kInf;
    }
    out.empirical_lower = std::exp(out.log_empirical_lower);
    return out;
}

std::pair<double, double> matrix_boyd_limits(const PsiFunction& psi, const PsiFunction& nu,
                                             int levels) {
    if (!psi.representation())
        throw std::invalid_argument("matrix_boyd_limits: representation required");
    if (levels < 4) throw std::invalid_argument("matrix_boyd_limits: levels >= 4 required");
    const GrandSpace carrier{WeightedDomain{}, nu};
    const FundFnSlopes slopes = fundfn_slopes(carrier, levels);
    return {slopes.at_inf, slopes.at_zero};
}

}  // namespace bgls
