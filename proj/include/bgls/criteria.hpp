#pragma once

#include <map>
#include <string>
#include <vector>

#include "bgls/grand.hpp"

namespace bgls {

enum class OperatorTag { P_alpha, Q_beta, maximal, hilbert, fourier };
std::string to_string(OperatorTag op);

// Boundedness verdict on G(psi; a, b). The rules are functions of (a, b)
// and the operator parameter alone:
//   P_alpha bounded iff alpha > 1/a        (alpha in (0,1))
//   Q_beta  bounded iff beta  < 1/b        (beta  in (0,1))
//   maximal operator bounded iff a > 1
//   Hilbert transform bounded iff a > 1 and b < inf
//   Fourier partial sums converge in norm iff a > 1 and b < inf
// All inequalities strict; boundary parameters report unbounded. The rules
// assume an unweighted one-dimensional domain.
struct CriterionVerdict {
    OperatorTag op = OperatorTag::P_alpha;
    std::map<std::string, double> parameters;
    bool bounded = false;
    std::string condition_text;
};
CriterionVerdict boundedness(OperatorTag op, const Interval& iv,
                             const std::map<std::string, double>& parameters = {});

// Pointwise Hardy averages on the half line, for f on a single unweighted
// 1-D block:
//   (P_alpha f)(t) = t^{-alpha} * integral_0^t s^{alpha-1} f(s) ds
//   (Q_beta  f)(t) = t^{-beta}  * integral_t^inf s^{beta-1} f(s) ds
// Power pieces integrate in closed form; numeric pieces go through
// quadrature. Nonintegrable configurations raise DivergenceError.
double hardy_P(const ProductFunction& f, double alpha, double t);
double hardy_Q(const ProductFunction& f, double beta, double t);

// The transformed function as a new ProductFunction: outside the support of
// f the image is an exact power tail (P) or head (Q); across the support it
// is a numeric evaluator wrapping the pointwise operator. Requires f to
// have bounded support away from 0 and inf.
ProductFunction hardy_apply(OperatorTag op, const ProductFunction& f, double param);

// Growth probe: ratios r_n = ||T f_n|| / ||f_n|| over truncations f_n of
// the representation, with the image re-truncated to the same box so every
// norm is finite. Levels run n = 10^{6k}: the norm's supremum lives at an
// interval endpoint, where truncation bias decays like 1/log n, so levels
// geometric in log n are what make the bias shrink per level. A plateau
// (< 1% relative change over the last 3 steps) is consistent with
// boundedness; monotone growth (> 10% per step) with unboundedness.
struct ProbeReport {
    enum class Flag { plateau, growth, inconclusive };
    std::vector<double> ns;
    std::vector<double> ratios;
    Flag flag = Flag::inconclusive;
};
std::string to_string(ProbeReport::Flag flag);
ProbeReport hardy_norm_probe(OperatorTag op, const GrandSpace& space, double param,
                             int probe_levels = 12);

}  // namespace bgls
