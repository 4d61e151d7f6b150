#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "bgls/errors.hpp"
#include "bgls/matrix.hpp"

using namespace bgls;

TEST_CASE("determinant of diagonal and rotation-like matrices") {
    CHECK(Matrix::diagonal({2.0, 3.0}).det() == doctest::Approx(6.0).epsilon(1e-14));
    const double r3 = std::sqrt(3.0);
    Matrix rot2(2, {r3, -1.0, 1.0, r3});  // 2 * rotation by pi/6
    CHECK(rot2.det() == doctest::Approx(4.0).epsilon(1e-14));
    Matrix sing(2, {1.0, 2.0, 2.0, 4.0});
    CHECK(sing.det() == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("inverse solves back to the identity") {
    Matrix a(2, {4.0, 7.0, 2.0, 6.0});
    Matrix inv = a.inverse();
    CHECK(inv(0, 0) == doctest::Approx(0.6).epsilon(1e-13));
    CHECK(inv(0, 1) == doctest::Approx(-0.7).epsilon(1e-13));
    CHECK(inv(1, 0) == doctest::Approx(-0.2).epsilon(1e-13));
    CHECK(inv(1, 1) == doctest::Approx(0.4).epsilon(1e-13));

    std::mt19937 rng(99u);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    std::vector<double> entries(9);
    for (auto& v : entries) v = u(rng);
    entries[0] += 4.0;  // diagonally dominated enough to stay invertible
    entries[4] += 4.0;
    entries[8] += 4.0;
    Matrix b(3, entries);
    Matrix binv = b.inverse();
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) {
            double s = 0.0;
            for (std::size_t k = 0; k < 3; ++k) s += b(i, k) * binv(k, j);
            CHECK(s == doctest::Approx(i == j ? 1.0 : 0.0).epsilon(1e-10).scale(1.0));
        }
}

TEST_CASE("inverse of a singular matrix fails loudly") {
    Matrix sing(2, {1.0, 2.0, 2.0, 4.0});
    CHECK_THROWS_AS(sing.inverse(), StructureError);
}

TEST_CASE("spectral norm equals the largest singular value") {
    CHECK(Matrix::diagonal({2.0, 3.0}).spectral_norm() == doctest::Approx(3.0).epsilon(1e-9));
    const double r3 = std::sqrt(3.0);
    Matrix rot2(2, {r3, -1.0, 1.0, r3});
    CHECK(rot2.spectral_norm() == doctest::Approx(2.0).epsilon(1e-9));
    CHECK(Matrix::identity(3).spectral_norm() == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("diagonal detection and entries") {
    Matrix d = Matrix::diagonal({2.0, 3.0});
    CHECK(d.is_diagonal());
    auto e = d.diagonal_entries();
    REQUIRE(e.size() == 2);
    CHECK(e[0] == 2.0);
    CHECK(e[1] == 3.0);
    Matrix nd(2, {1.0, 0.5, 0.0, 1.0});
    CHECK(!nd.is_diagonal());
}

TEST_CASE("scaled orthogonal factor detection") {
    const double r3 = std::sqrt(3.0);
    Matrix rot2(2, {r3, -1.0, 1.0, r3});
    auto s = rot2.scaled_orthogonal_factor();
    REQUIRE(s.has_value());
    CHECK(*s == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(Matrix::identity(2).scaled_orthogonal_factor().value() == doctest::Approx(1.0));
    CHECK(!Matrix::diagonal({2.0, 3.0}).scaled_orthogonal_factor().has_value());
}

TEST_CASE("matrix apply is a plain product") {
    Matrix a(2, {1.0, 2.0, 3.0, 4.0});
    std::vector<double> y = a.apply({1.0, 1.0});
    REQUIRE(y.size() == 2);
    CHECK(y[0] == doctest::Approx(3.0));
    CHECK(y[1] == doctest::Approx(7.0));
}
