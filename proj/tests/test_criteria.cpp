#include <doctest.h>

#include <cmath>
#include <vector>

#include "bgls/criteria.hpp"
#include "bgls/errors.hpp"

using namespace bgls;

namespace {

ProductFunction one_factor(std::vector<PowerPiece> pieces) {
    Factor1D f;
    f.power_pieces = std::move(pieces);
    return ProductFunction(WeightedDomain{}, {Factor(std::move(f))});
}

}  // namespace

TEST_CASE("averaging operator verdicts are monotone in the parameter") {
    Interval iv(2, 4);
    bool was_bounded = false;
    for (double alpha : {0.1, 0.3, 0.5, 0.50000001, 0.7, 0.9}) {
        const bool b = boundedness(OperatorTag::P_alpha, iv, {{"alpha", alpha}}).bounded;
        CHECK(b == (alpha > 0.5));  // threshold 1/a, strictly
        if (was_bounded) CHECK(b);  // once past the threshold it stays bounded
        was_bounded = b;
    }
    for (double beta : {0.1, 0.2499, 0.25, 0.3, 0.9}) {
        const bool b = boundedness(OperatorTag::Q_beta, iv, {{"beta", beta}}).bounded;
        CHECK(b == (beta < 0.25));  // threshold 1/b, strictly
    }
}

TEST_CASE("verdict table over representative intervals") {
    struct Row {
        Interval iv;
        bool p, q, m, h, f;
    };
    const std::vector<Row> rows = {
        {Interval(1, 2), false, true, false, false, false},
        {Interval(2, 4), true, false, true, true, true},
        {Interval(1, kInf), false, false, false, false, false},
        {Interval(2, kInf), true, false, true, false, false},
    };
    for (const auto& r : rows) {
        CHECK(boundedness(OperatorTag::P_alpha, r.iv, {{"alpha", 0.6}}).bounded == r.p);
        CHECK(boundedness(OperatorTag::Q_beta, r.iv, {{"beta", 0.3}}).bounded == r.q);
        CHECK(boundedness(OperatorTag::maximal, r.iv).bounded == r.m);
        CHECK(boundedness(OperatorTag::hilbert, r.iv).bounded == r.h);
        CHECK(boundedness(OperatorTag::fourier, r.iv).bounded == r.f);
    }
    CHECK(!boundedness(OperatorTag::Q_beta, Interval(2, kInf), {{"beta", 0.0001}}).bounded);
}

TEST_CASE("verdicts carry their deciding condition in text") {
    CriterionVerdict v = boundedness(OperatorTag::P_alpha, Interval(2, 4), {{"alpha", 0.6}});
    CHECK(!v.condition_text.empty());
    CHECK(v.parameters.at("alpha") == 0.6);
    CHECK(to_string(v.op) == "P_alpha");
}

TEST_CASE("operator parameters are validated") {
    Interval iv(2, 4);
    CHECK_THROWS_AS(boundedness(OperatorTag::P_alpha, iv, {{"alpha", 0.0}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(boundedness(OperatorTag::P_alpha, iv, {{"alpha", 1.5}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(boundedness(OperatorTag::P_alpha, iv, {}), std::invalid_argument);
    CHECK_THROWS_AS(boundedness(OperatorTag::Q_beta, iv, {}), std::invalid_argument);
}

TEST_CASE("downward averages of power heads have closed forms") {
    ProductFunction head = one_factor({{0.0, 1.0, 1.0, -0.3}});
    CHECK(hardy_P(head, 0.6, 0.7) ==
          doctest::Approx(std::pow(0.7, -0.3) / 0.3).epsilon(1e-11));

    ProductFunction ind = one_factor({{0.0, 1.0, 1.0, 0.0}});
    CHECK(hardy_P(ind, 0.6, 0.5) == doctest::Approx(1.0 / 0.6).epsilon(1e-12));
    // beyond the support the average decays like t^{-alpha}
    CHECK(hardy_P(ind, 0.6, 2.0) ==
          doctest::Approx(std::pow(2.0, -0.6) / 0.6).epsilon(1e-12));
}

TEST_CASE("upward averages of power tails have closed forms") {
    ProductFunction tail = one_factor({{1.0, kInf, 1.0, -0.8}});
    CHECK(hardy_Q(tail, 0.5, 2.0) ==
          doctest::Approx(std::pow(2.0, -0.8) / 0.3).epsilon(1e-11));
    CHECK(hardy_Q(tail, 0.5, 0.5) ==
          doctest::Approx(std::pow(0.5, -0.5) / 0.3).epsilon(1e-11));

    // past the support the averages vanish identically
    ProductFunction head = one_factor({{0.0, 1.0, 1.0, -0.3}});
    CHECK(hardy_Q(head, 0.2, 2.0) == 0.0);  // support ends at 1
    CHECK(hardy_P(tail, 0.6, 0.5) == 0.0);  // support starts at 1
}

TEST_CASE("averages diverge exactly at the critical exponents") {
    ProductFunction head = one_factor({{0.0, 1.0, 1.0, -0.3}});
    CHECK_THROWS_AS(hardy_P(head, 0.2, 0.7), DivergenceError);  // alpha <= c
    ProductFunction tail = one_factor({{1.0, kInf, 1.0, -0.8}});
    CHECK_THROWS_AS(hardy_Q(tail, 0.9, 2.0), DivergenceError);  // beta >= c
}

TEST_CASE("numeric pieces run the averages through quadrature") {
    Factor1D f;
    f.numeric_pieces.push_back({0.0, 1.0, [](double x) { return std::pow(x, -0.3); }});
    ProductFunction g(WeightedDomain{}, {Factor(f)});
    CHECK(hardy_P(g, 0.6, 0.7) ==
          doctest::Approx(std::pow(0.7, -0.3) / 0.3).epsilon(1e-8));
}

TEST_CASE("transformed functions agree pointwise with the averages") {
    ProductFunction f = one_factor({{0.5, 2.0, 1.0, -0.4}});
    ProductFunction pf = hardy_apply(OperatorTag::P_alpha, f, 0.6);
    for (double t : {0.3, 1.0, 3.0}) {
        std::vector<double> x{t};
        CHECK(pf.eval(x) == doctest::Approx(hardy_P(f, 0.6, t)).epsilon(1e-9));
    }
    ProductFunction qf = hardy_apply(OperatorTag::Q_beta, f, 0.3);
    for (double t : {0.3, 1.0, 3.0}) {
        std::vector<double> x{t};
        CHECK(qf.eval(x) == doctest::Approx(hardy_Q(f, 0.3, t)).epsilon(1e-9));
    }
}

TEST_CASE("transforming needs bounded support") {
    ProductFunction tail = one_factor({{1.0, kInf, 1.0, -0.8}});
    CHECK_THROWS_AS(hardy_apply(OperatorTag::Q_beta, tail, 0.3), StructureError);
    ProductFunction head = one_factor({{0.0, 1.0, 1.0, -0.3}});
    CHECK_THROWS_AS(hardy_apply(OperatorTag::P_alpha, head, 0.6), StructureError);
}

TEST_CASE("norm probes plateau for a bounded average and grow for an unbounded one") {
    WeightedDomain dom;
    GrandSpace g(dom, canonical_psi(Interval(2, 4), dom));
    ProbeReport ok = hardy_norm_probe(OperatorTag::P_alpha, g, 0.7);
    CHECK(ok.flag == ProbeReport::Flag::plateau);
    CHECK(ok.ratios.size() == ok.ns.size());

    ProbeReport bad = hardy_norm_probe(OperatorTag::P_alpha, g, 0.3);
    CHECK(bad.flag == ProbeReport::Flag::growth);
    CHECK(to_string(bad.flag) == "growth");

    ProbeReport dual = hardy_norm_probe(OperatorTag::Q_beta, g, 0.1);
    CHECK(dual.flag == ProbeReport::Flag::plateau);
}
