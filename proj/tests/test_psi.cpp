#include <doctest.h>

#include <cmath>
#include <vector>

#include "bgls/errors.hpp"
#include "bgls/psi.hpp"

using namespace bgls;

namespace {

ProductFunction one_factor(std::vector<PowerPiece> pieces) {
    Factor1D f;
    f.power_pieces = std::move(pieces);
    return ProductFunction(WeightedDomain{}, {Factor(std::move(f))});
}

}  // namespace

TEST_CASE("norming function from the two-sided pair evaluates its p-norms") {
    PsiFunction psi = canonical_psi(Interval(2, 4), WeightedDomain{});
    CHECK(psi.eval(3.0) == doctest::Approx(std::cbrt(6.0)).epsilon(1e-13));
    CHECK(psi.kind() == PsiKind::representation);
    REQUIRE(psi.representation() != nullptr);
    CHECK(psi.log_eval(3.0) == doctest::Approx(std::log(6.0) / 3.0).epsilon(1e-13));
}

TEST_CASE("norming function for a weighted first block") {
    WeightedDomain dom({BlockSpec::power_block(1.0)});
    PsiFunction psi = canonical_psi(Interval(2, 4), dom);
    // p-th power integrals 2/(4-p) + 1/(p-2); value 3 at p = 3
    CHECK(psi.eval(3.0) == doctest::Approx(std::cbrt(3.0)).epsilon(1e-13));
}

TEST_CASE("evaluation outside the open interval is a domain error") {
    PsiFunction psi = canonical_psi(Interval(2, 4), WeightedDomain{});
    CHECK_THROWS_AS(psi.eval(2.0), std::domain_error);
    CHECK_THROWS_AS(psi.eval(4.0), std::domain_error);
    CHECK_THROWS_AS(psi.eval(5.0), std::domain_error);
    CHECK_THROWS_AS(psi.eval(kNaN), std::domain_error);
}

TEST_CASE("constant and power-formula norming functions") {
    Interval iv(2, 4);
    PsiFunction one = PsiFunction::constant(iv, 1.0);
    CHECK(one.eval(2.5) == 1.0);
    CHECK(one.eval(3.9) == 1.0);
    CHECK_THROWS_AS(PsiFunction::constant(iv, 0.0), std::invalid_argument);

    PsiFunction pw = PsiFunction::power_formula(iv, 1.0, 0.5, 0.5);
    CHECK(pw.eval(3.0) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(pw.eval(2.5) == doctest::Approx(1.0 / std::sqrt(0.75)).epsilon(1e-13));

    PsiFunction growing = PsiFunction::power_formula(Interval(2, kInf), 2.0, 0.0, 4.0);
    CHECK(growing.eval(3.0) == doctest::Approx(162.0).epsilon(1e-13));
}

TEST_CASE("norming-function products multiply pointwise") {
    Interval iv(2, 4);
    PsiFunction psi = canonical_psi(iv, WeightedDomain{});
    PsiFunction two = PsiFunction::constant(iv, 2.0);
    PsiFunction prod = multiply_psi(psi, two);
    CHECK(prod.eval(3.0) == doctest::Approx(2.0 * std::cbrt(6.0)).epsilon(1e-13));

    PsiFunction sq = multiply_psi(psi, psi);
    CHECK(sq.eval(3.0) == doctest::Approx(std::pow(6.0, 2.0 / 3.0)).epsilon(1e-13));

    PsiFunction nu = PsiFunction::power_formula(iv, 1.0, 0.25, 0.25);
    for (double p : {2.3, 3.0, 3.8})
        CHECK(multiply_psi(psi, nu).eval(p) ==
              doctest::Approx(multiply_psi(nu, psi).eval(p)).epsilon(1e-14));
}

TEST_CASE("products require matching intervals") {
    PsiFunction x = PsiFunction::constant(Interval(2, 4), 1.0);
    PsiFunction y = PsiFunction::constant(Interval(2, 5), 1.0);
    CHECK_THROWS_AS(multiply_psi(x, y), std::invalid_argument);
}

TEST_CASE("building from a representation verifies finiteness") {
    ProductFunction ind = one_factor({{0.0, 1.0, 1.0, 0.0}});
    PsiFunction flat = PsiFunction::from_representation(ind, Interval(2, 4));
    for (double p : {2.5, 3.0, 3.7}) CHECK(flat.eval(p) == doctest::Approx(1.0).epsilon(1e-12));

    ProductFunction bad = one_factor({{0.0, 1.0, 1.0, -0.5}});
    CHECK_THROWS_AS(PsiFunction::from_representation(bad, Interval(2, 4)), DivergenceError);
}

TEST_CASE("representation-backed evaluation matches the quadrature route") {
    PsiFunction psi = canonical_psi(Interval(2, 4), WeightedDomain{});
    LpOptions forced;
    forced.force_quadrature = true;
    for (double p : {2.4, 3.0, 3.6}) {
        LpResult q = lp_norm(*psi.representation(), p, forced);
        CHECK(psi.eval(p) == doctest::Approx(q.value).epsilon(1e-7));
    }
}

TEST_CASE("classification of the two-sided pair") {
    PsiFunction psi = canonical_psi(Interval(2, 4), WeightedDomain{});
    PsiClassReport rep = classify(psi);
    CHECK(rep.in_EPsi);
    CHECK(rep.in_Psi);
    CHECK(rep.log_convex);
    CHECK(rep.continuous);
    CHECK(rep.psi_at_b_minus > 100.0);  // blows up toward the right endpoint
}

TEST_CASE("classification of a flat norming function") {
    PsiFunction one = PsiFunction::constant(Interval(2, 4), 1.0);
    PsiClassReport rep = classify(one);
    CHECK(!rep.in_EPsi);  // no blowup at the right endpoint
    CHECK(rep.continuous);
    CHECK(rep.log_convex);
    CHECK(rep.psi_at_b_minus == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("a formula with a right-endpoint pole but no representation") {
    // 2 (4-p)^{-1} stays >= 1 on (2,4) and blows up at the right endpoint.
    PsiFunction pole = PsiFunction::power_formula(Interval(2, 4), 2.0, 0.0, 1.0);
    PsiClassReport rep = classify(pole);
    CHECK(rep.in_EPsi);
    CHECK(!rep.in_Psi);
}

TEST_CASE("log-convexity flag goes false for a concave profile") {
    PsiFunction hump = PsiFunction::formula(
        Interval(2, 4), [](double p) { return std::exp(-(p - 3.0) * (p - 3.0)); }, "hump");
    PsiClassReport rep = classify(hump);
    CHECK(!rep.log_convex);
}

TEST_CASE("two-sided pair construction rejects unsupported domains") {
    CHECK_THROWS_AS(canonical_representation(Interval(2, kInf), WeightedDomain{}),
                    std::invalid_argument);
    WeightedDomain dom2({BlockSpec::lebesgue_block(2)});
    CHECK_THROWS_AS(canonical_representation(Interval(2, 4), dom2), std::invalid_argument);
}
