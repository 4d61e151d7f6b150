#pragma once

#include <functional>
#include <memory>
#include <string>

#include "bgls/function.hpp"
#include "bgls/interval.hpp"

namespace bgls {

enum class PsiKind { formula, constant, representation, product };

// A norming function p -> psi(p), positive and continuous on the open
// interval. Immutable once built; evaluation outside (a, b) is a domain
// error.
class PsiFunction {
public:
    static PsiFunction formula(const Interval& iv, std::function<double(double)> f,
                               std::string desc = "formula");
    // Same, but f already returns log psi(p). Use for factors that overflow
    // double range near an endpoint.
    static PsiFunction log_formula(const Interval& iv, std::function<double(double)> log_f,
                                   std::string desc = "formula");
    static PsiFunction constant(const Interval& iv, double c);

    // c (p-a)^{-ga} (b-p)^{-gb} for finite b; c (p-a)^{-ga} p^{gb} when
    // b = inf (the second factor then carries the growth toward infinity).
    static PsiFunction power_formula(const Interval& iv, double c, double ga, double gb);

    // psi(p) = |f|_p. Finiteness is verified on a fixed grid before
    // accepting; a non-finite norm anywhere on it raises DivergenceError.
    static PsiFunction from_representation(ProductFunction f, const Interval& iv,
                                           double tol = 1e-9);

    double eval(double p) const;
    double log_eval(double p) const;

    const Interval& interval() const { return iv_; }
    PsiKind kind() const { return kind_; }
    const std::shared_ptr<const ProductFunction>& representation() const { return rep_; }
    const std::string& describe() const { return desc_; }

private:
    PsiFunction() = default;
    Interval iv_;
    PsiKind kind_ = PsiKind::formula;
    std::function<double(double)> log_eval_;
    std::shared_ptr<const ProductFunction> rep_;
    std::string desc_;

    void sanity_scan() const;
};

// Pointwise product; the intervals must agree exactly.
PsiFunction multiply_psi(const PsiFunction& x, const PsiFunction& y);

struct PsiClassReport {
    bool in_EPsi = false;     // psi >= 1 on the grids and psi(b-0) diverges
    bool in_Psi = false;      // representation present and consistent with eval
    double psi_at_a_plus = kNaN;   // +inf when the endpoint estimate diverges
    double psi_at_b_minus = kNaN;
    bool log_convex = false;  // p log psi(p) midpoint-convex on a uniform grid
    bool continuous = true;
};

// Grid-sampled classification. grid_size >= 16.
PsiClassReport classify(const PsiFunction& psi, int grid_size = 129);

// Two-power representation with p-th power integrals 1/((1+theta)(1 - p/b))
// + 1/((1+theta)(p/a - 1)): simple poles at both endpoints, adapted to the
// first block's weight order. Finite b only. Remaining blocks carry unit
// indicators.
ProductFunction canonical_representation(const Interval& iv, const WeightedDomain& dom);
PsiFunction canonical_psi(const Interval& iv, const WeightedDomain& dom);

}  // namespace bgls
