#pragma once

#include <functional>
#include <span>
#include <stdexcept>
#include <vector>

#include "bgls/numerics.hpp"

namespace bgls {

enum class WeightKind { lebesgue, power, custom };

// One factor of the product domain: R_+^dim (or R^dim) carrying a weight
// that scales like s^theta under x -> s x.
struct BlockSpec {
    int dim = 1;
    double theta = 0.0;
    WeightKind kind = WeightKind::lebesgue;
    double coef = 1.0;                        // power weight coef * x^theta
    std::function<double(double)> custom;     // 1-D only; homogeneous of order theta
    bool half_space = true;

    static BlockSpec lebesgue_block(int dim = 1, bool half_space = true) {
        BlockSpec b;
        b.dim = dim;
        b.half_space = half_space;
        return b;
    }
    static BlockSpec power_block(double theta, double coef = 1.0) {
        BlockSpec b;
        b.theta = theta;
        b.coef = coef;
        b.kind = WeightKind::power;
        return b;
    }
    static BlockSpec custom_block(double theta, std::function<double(double)> w) {
        BlockSpec b;
        b.theta = theta;
        b.kind = WeightKind::custom;
        b.custom = std::move(w);
        return b;
    }

    // d + theta: the exponent governing how the block's measure scales.
    double order() const { return dim + theta; }

    // Weight density at a point of a 1-D block.
    double weight(double x) const;

    void validate() const;
};

struct WeightedDomain {
    std::vector<BlockSpec> blocks;

    WeightedDomain() { blocks.push_back(BlockSpec::lebesgue_block()); }
    explicit WeightedDomain(std::vector<BlockSpec> bs) : blocks(std::move(bs)) {
        if (blocks.empty()) throw std::invalid_argument("WeightedDomain: no blocks");
        for (const auto& b : blocks) b.validate();
    }

    std::size_t block_count() const { return blocks.size(); }
    int total_dim() const {
        int d = 0;
        for (const auto& b : blocks) d += b.dim;
        return d;
    }
    bool all_one_dim() const {
        for (const auto& b : blocks)
            if (b.dim != 1) return false;
        return true;
    }
};

// prod_r s(r)^{e(r)} for positive bases, computed through logs so extreme
// magnitudes stay representable.
double multi_power(std::span<const double> s, std::span<const double> e);

// Product weight at a point with one coordinate per (1-D) block.
double product_weight(const WeightedDomain& dom, std::span<const double> x);

// prod_r s_r^{d_r + theta_r}: how the measure of any set scales under the
// block-wise dilation x_r -> s_r x_r.
double measure_scaling_factor(const WeightedDomain& dom, std::span<const double> s);
double log_measure_scaling_factor(const WeightedDomain& dom, std::span<const double> s);

// Sampled homogeneity-defect extrema of a 1-D block weight against its
// declared order: extrema of W(s y) / (s^theta W(y)) over log-spaced grids.
// These are sampled values, not certified suprema/infima.
struct DefectConstants {
    double k_plus_inf = 1.0;   // sup over s >= 1
    double k_minus_inf = 1.0;  // inf over s >= 1
    double k_plus_0 = 1.0;     // sup over s <= 1
    double k_minus_0 = 1.0;    // inf over s <= 1
};

DefectConstants defect_constants(const BlockSpec& block, double theta_declared,
                                 int sample_budget = 4096);

}  // namespace bgls
