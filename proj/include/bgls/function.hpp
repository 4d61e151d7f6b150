#pragma once

#include <functional>
#include <memory>
#include <span>
#include <variant>
#include <vector>

#include "bgls/domain.hpp"
#include "bgls/errors.hpp"
#include "bgls/quadrature.hpp"

namespace bgls {

// value coef * x^expnt on (lo, hi]; zero outside. coef > 0, 0 <= lo < hi <= inf.
struct PowerPiece {
    double lo = 0.0;
    double hi = 1.0;
    double coef = 1.0;
    double expnt = 0.0;

    double eval(double x) const;
};

// Pointwise-defined piece; integrals of it always go through quadrature.
struct NumericPiece {
    double lo = 0.0;
    double hi = 1.0;
    std::function<double(double)> eval;
};

// Factor living on a 1-D block. Pieces (of both kinds together) must have
// pairwise disjoint interiors; the factor vanishes between them.
struct Factor1D {
    std::vector<PowerPiece> power_pieces;
    std::vector<NumericPiece> numeric_pieces;

    double eval(double x) const;
    bool analytic() const { return numeric_pieces.empty(); }
};

// Factor on a block of dimension >= 2 (or a 1-D factor without piece
// structure), evaluated pointwise. Used by general matrix dilations.
struct FactorND {
    int dim = 1;
    std::function<double(std::span<const double>)> eval;
};

using Factor = std::variant<Factor1D, FactorND>;

// f(x) = prod_r f_r(x_r), one factor per domain block.
class ProductFunction {
public:
    ProductFunction(WeightedDomain dom, std::vector<Factor> factors);

    const WeightedDomain& domain() const { return domain_; }
    const std::vector<Factor>& factors() const { return factors_; }
    bool analytic() const;

    // Evaluate at a point given by one coordinate per block (1-D blocks only).
    double eval(std::span<const double> x) const;

private:
    WeightedDomain domain_;
    std::vector<Factor> factors_;
};

enum class LpMethod { analytic, quadrature, mixed };

struct LpResult {
    double value = 0.0;      // may be +inf when some factor integral diverges
    double log_value = -kInf;
    double est_error = 0.0;  // relative, best effort
    LpMethod method = LpMethod::analytic;
};

struct LpOptions {
    bool force_quadrature = false;  // run power pieces through quadrature too
    QuadOptions quad{};
};

// |f|_p under the domain's product weight. Power pieces integrate in closed
// form (divergence detected exactly); numeric pieces go through adaptive
// quadrature after a log-space rescaling that keeps |f|^p representable.
// Throws ToleranceError if quadrature cannot reach its budgeted accuracy.
LpResult lp_norm(const ProductFunction& f, double p, const LpOptions& opts = LpOptions{});

// log of int_piece |c x^e|^p W(x) dx for a power weight W = wcoef x^wtheta;
// +inf when the integral diverges. Exposed for oracle use in tests.
double log_power_piece_lp(const PowerPiece& piece, double p, double wtheta, double wcoef);

// f(x / s_r) block-wise. Scales supports and keeps piece structure exact.
ProductFunction scale_arg(const ProductFunction& f, std::span<const double> s);
ProductFunction scale_arg(const ProductFunction& f, double s);  // same scale on all blocks

// Restriction to the box where every block coordinate lies in (1/n, n), with
// each factor capped at height n (so the product is capped at n^k for k
// factors). Nonnegative f only; exact on power pieces. The resulting
// sequence increases pointwise to f as n grows.
ProductFunction truncate(const ProductFunction& f, double n);

// Indicator of a box of prescribed weighted measure delta: the first block
// takes measure delta, remaining blocks measure 1, each as (0, t_r) with t_r
// solved from the weight primitive. Requires 1-D power/Lebesgue blocks.
ProductFunction indicator_of_measure(const WeightedDomain& dom, double delta);

}  // namespace bgls
