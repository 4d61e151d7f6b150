#include <doctest.h>

#include <cmath>
#include <vector>

#include "bgls/indices.hpp"

using namespace bgls;

namespace {

GrandSpace canonical_space(double a, double b) {
    WeightedDomain dom;
    return GrandSpace(dom, canonical_psi(Interval(a, b), dom));
}

}  // namespace

TEST_CASE("growth index of the scaling family on the unweighted line") {
    PsiFunction psi = canonical_psi(Interval(2, 4), WeightedDomain{});
    PsiFunction nu = canonical_psi(Interval(2, 4), WeightedDomain{});
    WeightedDomain dom;
    CHECK(boyd_index(psi, nu, dom, 0, BoydDirection::upper) ==
          doctest::Approx(0.5).epsilon(0.02));
    CHECK(boyd_index(psi, nu, dom, 0, BoydDirection::lower) ==
          doctest::Approx(0.25).epsilon(0.02));
}

TEST_CASE("a weighted block doubles the growth order") {
    WeightedDomain wdom({BlockSpec::power_block(1.0)});
    PsiFunction psi = canonical_psi(Interval(2, 4), WeightedDomain{});
    PsiFunction nu = PsiFunction::constant(Interval(2, 4), 1.0);
    CHECK(boyd_index(psi, nu, wdom, 0, BoydDirection::lower) ==
          doctest::Approx(0.5).epsilon(0.02));
}

TEST_CASE("per-block indices scale with each block's order") {
    WeightedDomain dom({BlockSpec::lebesgue_block(), BlockSpec::lebesgue_block(2)});
    PsiFunction psi = canonical_psi(Interval(2, 4), WeightedDomain{});
    PsiFunction nu = canonical_psi(Interval(2, 4), WeightedDomain{});
    CHECK(boyd_index(psi, nu, dom, 1, BoydDirection::upper) ==
          doctest::Approx(1.0).epsilon(0.02));

    IndexReport rep = boyd_report(psi, nu, dom, 8);
    REQUIRE(rep.per_block.size() == 2);
    CHECK(rep.per_block[0].first == doctest::Approx(0.5).epsilon(0.02));
    CHECK(rep.per_block[0].second == doctest::Approx(0.25).epsilon(0.02));
    CHECK(rep.per_block[1].first == doctest::Approx(1.0).epsilon(0.02));
    CHECK(rep.per_block[1].second == doctest::Approx(0.5).epsilon(0.02));
    REQUIRE(rep.closed_form.size() == rep.numerical.size());
    for (std::size_t i = 0; i < rep.closed_form.size(); ++i)
        CHECK(rep.numerical[i] == doctest::Approx(rep.closed_form[i]).epsilon(0.02));
}

TEST_CASE("growth traces require a representation") {
    PsiFunction no_rep = PsiFunction::power_formula(Interval(2, 4), 2.0, 0.0, 1.0);
    PsiFunction nu = PsiFunction::constant(Interval(2, 4), 1.0);
    WeightedDomain dom;
    CHECK_THROWS_AS(boyd_trace(no_rep, nu, dom, 0, BoydDirection::upper),
                    std::invalid_argument);
}

TEST_CASE("dilation function fixes the value one at t equal one") {
    GrandSpace g = canonical_space(2, 4);
    CHECK(log_shimogaki_M(g, 0.0) == 0.0);
    CHECK(shimogaki_M(g, 1.0) == 1.0);
}

TEST_CASE("dilation function of the unnormed space is an exact power") {
    WeightedDomain dom;
    GrandSpace g(dom, PsiFunction::constant(Interval(2, 4), 1.0));
    CHECK(shimogaki_M(g, 16.0) == doctest::Approx(4.0).epsilon(1e-6));
    CHECK(shimogaki_M(g, 1.0 / 16.0) == doctest::Approx(0.5).epsilon(1e-6));
}

TEST_CASE("dilation function is submultiplicative") {
    GrandSpace g = canonical_space(2, 4);
    const std::vector<double> ts{0.1, 0.5, 2.0, 10.0, 100.0};
    for (double t1 : ts)
        for (double t2 : ts) {
            if (t1 * t2 > 1e4) continue;
            const double lhs = shimogaki_M(g, t1 * t2);
            const double rhs = shimogaki_M(g, t1) * shimogaki_M(g, t2);
            CHECK(lhs <= rhs * (1.0 + 1e-6));
        }
    CHECK(shimogaki_M(g, 10.0) * shimogaki_M(g, 0.1) >= 1.0 - 1e-9);
}

TEST_CASE("dilation indices recover the interval reciprocals") {
    ShimogakiReport r24 = shimogaki_indices(canonical_space(2, 4));
    CHECK(r24.beta_minus == doctest::Approx(0.25).epsilon(0.02));
    CHECK(r24.beta_plus == doctest::Approx(0.5).epsilon(0.02));
    CHECK(r24.beta_minus <= r24.beta_plus + 1e-12);
    CHECK(!r24.flagged);
    CHECK(!r24.M_profile.empty());

    ShimogakiReport r12 = shimogaki_indices(canonical_space(1, 2));
    CHECK(r12.beta_minus == doctest::Approx(0.5).epsilon(0.02));
    CHECK(r12.beta_plus == doctest::Approx(1.0).epsilon(0.02));
}

TEST_CASE("dilation indices ignore the norming function up to its interval") {
    WeightedDomain dom;
    GrandSpace flat(dom, PsiFunction::constant(Interval(2, 4), 1.0));
    ShimogakiReport r = shimogaki_indices(flat);
    CHECK(r.beta_minus == doctest::Approx(0.25).epsilon(0.02));
    CHECK(r.beta_plus == doctest::Approx(0.5).epsilon(0.02));
}

TEST_CASE("scaling the norming function leaves the dilation function unchanged") {
    WeightedDomain dom;
    PsiFunction psi = canonical_psi(Interval(2, 4), dom);
    GrandSpace g(dom, psi);
    GrandSpace g2(dom, multiply_psi(psi, PsiFunction::constant(Interval(2, 4), 2.0)));
    for (double t : {0.01, 0.5, 10.0})
        CHECK(shimogaki_M(g, t) == doctest::Approx(shimogaki_M(g2, t)).epsilon(1e-9));
    ShimogakiReport a = shimogaki_indices(g);
    ShimogakiReport b = shimogaki_indices(g2);
    CHECK(a.beta_minus == doctest::Approx(b.beta_minus).epsilon(1e-9));
    CHECK(a.beta_plus == doctest::Approx(b.beta_plus).epsilon(1e-9));
}

TEST_CASE("associate-space indices come from the conjugate exponents") {
    auto [up, lo] = associate_boyd(Interval(2, 4));
    CHECK(up == doctest::Approx(0.75).epsilon(1e-14));
    CHECK(lo == doctest::Approx(0.5).epsilon(1e-14));

    auto [upi, loi] = associate_boyd(Interval(1, kInf));
    CHECK(upi == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(loi == doctest::Approx(0.0).epsilon(1e-14));

    auto [upn, lon] = associate_boyd(Interval(2, 2.000001));
    CHECK(upn == doctest::Approx(0.5).epsilon(1e-6));
    CHECK(lon == doctest::Approx(0.5).epsilon(1e-6));

    // conjugate pairing: 1/a + (1 - 1/a) = 1
    for (double a : {1.0, 1.7, 3.0}) {
        auto [u2, l2] = associate_boyd(Interval(a, a + 2.0));
        CHECK(l2 + 1.0 / a == doctest::Approx(1.0).epsilon(1e-14));
        (void)u2;
    }
}

TEST_CASE("index chain orders the four indices") {
    SandwichReport s24 = sandwich_check(canonical_space(2, 4));
    CHECK(s24.holds);
    CHECK(s24.B_minus <= s24.beta_minus + 0.02);
    CHECK(s24.beta_minus <= s24.beta_plus + 0.02);
    CHECK(s24.beta_plus <= s24.B_plus + 0.02);

    SandwichReport s13 = sandwich_check(canonical_space(1, 3));
    CHECK(s13.holds);
}
