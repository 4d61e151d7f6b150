#include "bgls/domain.hpp"

#include <cmath>

namespace bgls {

double BlockSpec::weight(double x) const {
    switch (kind) {
        case WeightKind::lebesgue: return 1.0;
        case WeightKind::power: return coef * std::pow(x, theta);
        case WeightKind::custom: return custom(x);
    }
    return 1.0;
}

void BlockSpec::validate() const {
    if (dim < 1) throw std::invalid_argument("BlockSpec: dim >= 1 required");
    if (!(theta > -1.0)) throw std::invalid_argument("BlockSpec: theta > -1 required");
    if (kind == WeightKind::power && !(coef > 0.0))
        throw std::invalid_argument("BlockSpec: power weight needs coef > 0");
    if (kind == WeightKind::custom && !custom)
        throw std::invalid_argument("BlockSpec: custom weight evaluator missing");
    if (kind == WeightKind::custom && dim != 1)
        throw std::invalid_argument("BlockSpec: custom weights supported on 1-D blocks only");
    if (kind == WeightKind::lebesgue && theta != 0.0)
        throw std::invalid_argument("BlockSpec: Lebesgue block must have theta = 0");
}

double multi_power(std::span<const double> s, std::span<const double> e) {
    if (s.size() != e.size())
        throw std::invalid_argument("multi_power: base and exponent vectors differ in length");
    if (s.empty()) throw std::invalid_argument("multi_power: empty vectors");
    double acc = 0.0;
    for (std::size_t r = 0; r < s.size(); ++r) {
        if (!(s[r] > 0.0)) throw std::invalid_argument("multi_power: bases must be positive");
        acc += e[r] * std::log(s[r]);
    }
    return std::exp(acc);
}

double product_weight(const WeightedDomain& dom, std::span<const double> x) {
    if (x.size() != dom.block_count())
        throw std::invalid_argument("product_weight: one coordinate per block expected");
    double w = 1.0;
    for (std::size_t r = 0; r < x.size(); ++r) {
        if (dom.blocks[r].dim != 1)
            throw std::invalid_argument("product_weight: 1-D blocks only");
        w *= dom.blocks[r].weight(x[r]);
    }
    return w;
}

double log_measure_scaling_factor(const WeightedDomain& dom, std::span<const double> s) {
    if (s.size() != dom.block_count())
        throw std::invalid_argument("measure_scaling_factor: one scale per block expected");
    double ls = 0.0;
    for (std::size_t r = 0; r < s.size(); ++r) {
        if (!(s[r] > 0.0))
            throw std::invalid_argument("measure_scaling_factor: scales must be positive");
        ls += dom.blocks[r].order() * std::log(s[r]);
    }
    return ls;
}

double measure_scaling_factor(const WeightedDomain& dom, std::span<const double> s) {
    return std::exp(log_measure_scaling_factor(dom, s));
}

DefectConstants defect_constants(const BlockSpec& block, double theta_declared,
                                 int sample_budget) {
    if (block.dim != 1)
        throw std::invalid_argument("defect_constants: 1-D blocks only");
    if (sample_budget < 16)
        throw std::invalid_argument("defect_constants: sample_budget >= 16 required");

    const int n = std::max(4, static_cast<int>(std::sqrt(static_cast<double>(sample_budget) / 2)));
    DefectConstants out;
    out.k_plus_inf = out.k_plus_0 = -kInf;
    out.k_minus_inf = out.k_minus_0 = kInf;

    auto ratio = [&](double s, double y) {
        const double denom = std::pow(s, theta_declared) * block.weight(y);
        return block.weight(s * y) / denom;
    };

    for (int i = 0; i < n; ++i) {
        // log-spaced y in [1e-6, 1e6]
        const double y = std::pow(10.0, -6.0 + 12.0 * i / (n - 1.0));
        for (int j = 0; j < n; ++j) {
            const double s_up = std::pow(10.0, 6.0 * j / (n - 1.0));   // [1, 1e6]
            const double s_dn = 1.0 / s_up;                            // [1e-6, 1]
            const double r_up = ratio(s_up, y);
            const double r_dn = ratio(s_dn, y);
            if (std::isfinite(r_up)) {
                out.k_plus_inf = std::max(out.k_plus_inf, r_up);
                out.k_minus_inf = std::min(out.k_minus_inf, r_up);
            }
            if (std::isfinite(r_dn)) {
                out.k_plus_0 = std::max(out.k_plus_0, r_dn);
                out.k_minus_0 = std::min(out.k_minus_0, r_dn);
            }
        }
    }
    return out;
}

}  // namespace bgls
