#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "bgls/domain.hpp"
#include "bgls/interval.hpp"
#include "bgls/quadrature.hpp"

using namespace bgls;

TEST_CASE("interval construction enforces 1 <= a < b") {
    CHECK_THROWS_AS(Interval(0.5, 2.0), std::invalid_argument);
    CHECK_THROWS_AS(Interval(2.0, 2.0), std::invalid_argument);
    CHECK_THROWS_AS(Interval(3.0, 2.0), std::invalid_argument);
    CHECK_THROWS_AS(Interval(kInf, kInf), std::invalid_argument);
    Interval iv(1.0, kInf);
    CHECK(iv.b_infinite());
}

TEST_CASE("interval containment is strict") {
    Interval iv(2, 4);
    CHECK(!iv.contains(2.0));
    CHECK(!iv.contains(4.0));
    CHECK(iv.contains(2.0000001));
    CHECK(iv.contains(3.9999999));
    CHECK(!iv.contains(kNaN));
    CHECK(!iv.contains(kInf));
}

TEST_CASE("grid coordinate map covers finite and infinite intervals") {
    Interval f(2, 4);
    CHECK(f.p_of_u(0.5) == doctest::Approx(3.0));
    Interval inf(2, kInf);
    CHECK(inf.p_of_u(0.5) == doctest::Approx(3.0));
    CHECK(inf.p_of_u(0.9) == doctest::Approx(11.0));
    CHECK(inf.p_of_u(0.999) > 1000.0);
}

TEST_CASE("block validation rejects bad parameters") {
    BlockSpec b = BlockSpec::power_block(-1.5);
    CHECK_THROWS_AS(b.validate(), std::invalid_argument);  // theta <= -1
    BlockSpec c = BlockSpec::power_block(1.0, 0.0);
    CHECK_THROWS_AS(c.validate(), std::invalid_argument);  // coef must be positive
    BlockSpec d = BlockSpec::custom_block(1.0, [](double x) { return x; });
    d.dim = 2;
    CHECK_THROWS_AS(d.validate(), std::invalid_argument);  // custom weights are 1-D
    BlockSpec e = BlockSpec::lebesgue_block();
    e.theta = 0.5;
    CHECK_THROWS_AS(e.validate(), std::invalid_argument);
    BlockSpec g = BlockSpec::lebesgue_block(0);
    CHECK_THROWS_AS(g.validate(), std::invalid_argument);  // dim >= 1
}

TEST_CASE("block order is dimension plus weight exponent") {
    CHECK(BlockSpec::lebesgue_block().order() == 1.0);
    CHECK(BlockSpec::power_block(1.0).order() == 2.0);
    BlockSpec b = BlockSpec::lebesgue_block(3);
    CHECK(b.order() == 3.0);
}

TEST_CASE("multi_power multiplies powers of positive bases") {
    std::vector<double> s{2.0, 3.0};
    std::vector<double> e{1.0, 2.0};
    CHECK(multi_power(s, e) == doctest::Approx(18.0).epsilon(1e-14));
    std::vector<double> s1{5.0};
    std::vector<double> e1{0.0};
    CHECK(multi_power(s1, e1) == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("multi_power rejects mismatched or nonpositive input") {
    std::vector<double> s{2.0, 3.0};
    std::vector<double> e{1.0};
    CHECK_THROWS_AS(multi_power(s, e), std::invalid_argument);
    std::vector<double> none;
    CHECK_THROWS_AS(multi_power(none, none), std::invalid_argument);
    std::vector<double> bad{-2.0};
    std::vector<double> e1{1.0};
    CHECK_THROWS_AS(multi_power(bad, e1), std::invalid_argument);
}

TEST_CASE("product weight multiplies block weights at a point") {
    WeightedDomain dom;
    std::vector<double> x{0.7};
    CHECK(product_weight(dom, x) == doctest::Approx(1.0));
    WeightedDomain dom2({BlockSpec::lebesgue_block(), BlockSpec::power_block(1.0, 2.0)});
    std::vector<double> y{0.7, 3.0};
    CHECK(product_weight(dom2, y) == doctest::Approx(6.0).epsilon(1e-14));
}

TEST_CASE("measure scaling factor on an unweighted line") {
    WeightedDomain dom;
    std::vector<double> s{2.0};
    CHECK(measure_scaling_factor(dom, s) == doctest::Approx(2.0).epsilon(1e-14));
}

TEST_CASE("measure scaling factor sees the weight order") {
    WeightedDomain dom({BlockSpec::power_block(1.0)});
    std::vector<double> s{2.0};
    CHECK(measure_scaling_factor(dom, s) == doctest::Approx(4.0).epsilon(1e-14));
}

TEST_CASE("measure scaling factor multiplies across blocks") {
    WeightedDomain dom({BlockSpec::lebesgue_block(), BlockSpec::power_block(1.0)});
    std::vector<double> s{2.0, 3.0};
    CHECK(measure_scaling_factor(dom, s) == doctest::Approx(18.0).epsilon(1e-13));
}

TEST_CASE("measure scaling is a group action") {
    WeightedDomain dom({BlockSpec::power_block(0.5), BlockSpec::lebesgue_block()});
    std::mt19937 rng(404u);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    for (int k = 0; k < 20; ++k) {
        std::vector<double> s{std::pow(10.0, u(rng)), std::pow(10.0, u(rng))};
        std::vector<double> inv{1.0 / s[0], 1.0 / s[1]};
        CHECK(measure_scaling_factor(dom, s) * measure_scaling_factor(dom, inv) ==
              doctest::Approx(1.0).epsilon(1e-12));
        // log form is additive
        CHECK(log_measure_scaling_factor(dom, s) + log_measure_scaling_factor(dom, inv) ==
              doctest::Approx(0.0).epsilon(1e-12));
    }
}

TEST_CASE("defect constants are unity for an exact power weight") {
    DefectConstants k = defect_constants(BlockSpec::power_block(1.5, 2.0), 1.5);
    CHECK(k.k_plus_inf == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(k.k_minus_inf == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(k.k_plus_0 == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(k.k_minus_0 == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("defect constants expose a mixed-order weight against too small an order") {
    // W(x) = x + x^2 scales between orders 1 and 2; declared order 1 leaves
    // the upward defect unbounded and the downward one collapsing.
    BlockSpec blk = BlockSpec::custom_block(1.0, [](double x) { return x + x * x; });
    DefectConstants k = defect_constants(blk, 1.0);
    CHECK(k.k_plus_inf > 1e3);
    CHECK(k.k_minus_inf == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(k.k_plus_0 == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(k.k_minus_0 < 1e-3);
}

TEST_CASE("defect constants degenerate on the other side for too large an order") {
    BlockSpec blk = BlockSpec::custom_block(2.0, [](double x) { return x + x * x; });
    DefectConstants k = defect_constants(blk, 2.0);
    CHECK(k.k_plus_inf == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(k.k_minus_inf < 1e-3);
    CHECK(k.k_plus_0 > 1e3);
    CHECK(k.k_minus_0 == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("quadrature integrates smooth and singular integrands") {
    QuadResult a = integrate([](double x) { return x * x; }, 0.0, 1.0);
    CHECK(a.converged);
    CHECK(a.value == doctest::Approx(1.0 / 3.0).epsilon(1e-12));

    QuadResult b = integrate([](double x) { return 1.0 / std::sqrt(x); }, 0.0, 1.0);
    CHECK(b.value == doctest::Approx(2.0).epsilon(1e-7));
}

TEST_CASE("quadrature handles infinite tails") {
    QuadResult a = integrate([](double x) { return std::exp(-x); }, 0.0, kInf);
    CHECK(a.converged);
    CHECK(a.value == doctest::Approx(1.0).epsilon(1e-9));

    QuadResult b = integrate([](double x) { return 1.0 / (x * x); }, 1.0, kInf);
    CHECK(b.value == doctest::Approx(1.0).epsilon(1e-9));

    QuadResult c = integrate([](double x) { return std::exp(-x * x); }, -kInf, kInf);
    CHECK(c.value == doctest::Approx(std::sqrt(std::acos(-1.0))).epsilon(1e-9));
}
