#pragma once

#include <optional>
#include <vector>

#include "bgls/grand.hpp"
#include "bgls/matrix.hpp"

namespace bgls {

// Argument-scaling specification: per-block scalar factors, an invertible
// matrix on one Lebesgue block, or a matrix together with the exponent of a
// radial weight |x|^sigma on the target measure.
enum class DilationKind { vector_scale, matrix, matrix_weighted };

struct DilationSpec {
    DilationKind kind = DilationKind::vector_scale;
    std::vector<double> s;  // one positive factor per block (vector kind)
    Matrix A;               // matrix kinds
    double sigma = 0.0;     // matrix_weighted only

    static DilationSpec vector(std::vector<double> s);
    static DilationSpec matrix_dilation(Matrix A);
    static DilationSpec weighted_matrix(Matrix A, double sigma);
    void validate() const;
};

// sigma_s f (x) = f(x_1/s_1, ..., x_k/s_k) blockwise, or f(A^{-1} x).
// Diagonal matrices with positive entries on all-1-D domains reduce to the
// vector form and keep product structure; any other matrix needs a single
// full-space Lebesgue block carrying one numeric-evaluator factor.
ProductFunction apply_dilation(const DilationSpec& spec, const ProductFunction& f);

// phi(G(nu), S) with S = prod_r s_r^{d_r + theta_r}: the exact operator norm
// bound of sigma_s from G(psi) into G(psi nu). psi enters only through the
// interval agreement check.
double dilation_norm_closed_form(const PsiFunction& psi, const PsiFunction& nu,
                                 const WeightedDomain& domain,
                                 const std::vector<double>& s);
SupOverP dilation_norm_closed_form_sup(const PsiFunction& psi, const PsiFunction& nu,
                                       const WeightedDomain& domain,
                                       const std::vector<double>& s);

enum class NormRelation { equality_expected, upper_bound_only };

struct OperatorNormResult {
    double closed_form = kNaN;
    double log_closed_form = kNaN;
    double empirical_lower = kNaN;  // ratio from the best available witness
    double log_empirical_lower = kNaN;
    NormRelation relation = NormRelation::upper_bound_only;
    double log_scale_factor = kNaN;  // log of the phi argument
};

// Empirical operator norm of sigma_s from G(psi) into G(psi nu). With a
// representation the ratio uses it as the single witness and equality with
// the closed form is expected; without one, a small bank of integrable
// two-sided power functions gives a lower bound only.
OperatorNormResult dilation_norm_empirical(const PsiFunction& psi, const PsiFunction& nu,
                                           const WeightedDomain& domain,
                                           const std::vector<double>& s,
                                           const std::optional<NormOptions>& opts = {});

// Operator norm of f -> f(A^{-1} x). Lebesgue target measure when sigma is
// absent: the phi argument is |det A|. With sigma, the target carries the
// radial weight |x|^sigma and the argument becomes |det A| * |||A|||^sigma;
// the bound is known to be attained only for scalar multiples of orthogonal
// matrices.
OperatorNormResult matrix_dilation_norm(const PsiFunction& psi, const PsiFunction& nu,
                                        const Matrix& A,
                                        std::optional<double> sigma = {},
                                        const std::optional<NormOptions>& opts = {});

// Slopes of log phi(G(nu), delta) against log delta along delta = 10^{+-2m}:
// estimates of (1/a, 1/b). Requires psi to carry a representation, matching
// the hypothesis under which the norm equals phi exactly.
std::pair<double, double> matrix_boyd_limits(const PsiFunction& psi, const PsiFunction& nu,
                                             int levels = 10);

}  // namespace bgls
