#include <doctest.h>

#include <cmath>
#include <numbers>

#include "heatcone/heat_coeffs.hpp"

using namespace heatcone;
using exact::ExactScalar;
using exact::Rational;

TEST_CASE("3-sphere coefficients are 2 pi^2 / j!") {
    for (int j = 0; j <= 8; ++j)
        CHECK(heat::sphere_coeff(3, j) ==
              ExactScalar(Rational(exact::Int(2), exact::factorial(j)), 4));
}

TEST_CASE("general sphere assembly against the independent closed forms") {
    for (int n : {3, 5, 7})
        for (int j = 0; j <= 8; ++j)
            CHECK(heat::sphere_coeff(n, j) == heat::sphere_coeff_closed(n, j));
}

TEST_CASE("volume term equals the sphere volume") {
    // Vol(S^n) = 2 pi^{(n+1)/2} / Gamma((n+1)/2)
    CHECK(heat::sphere_coeff(3, 0) == ExactScalar(Rational(2), 4));
    CHECK(heat::sphere_coeff(5, 0) == ExactScalar(Rational(1), 6));   // pi^3
    CHECK(heat::sphere_coeff(7, 0) == ExactScalar(Rational(1, 3), 8));
    CHECK(heat::sphere_coeff(9, 0) == ExactScalar(Rational(1, 12), 10));
}

TEST_CASE("the 5-sphere series terminates at order six") {
    CHECK(heat::sphere_coeff(5, 6).is_zero());
    CHECK_FALSE(heat::sphere_coeff(5, 5).is_zero());
    CHECK_FALSE(heat::sphere_coeff(7, 6).is_zero());
}

TEST_CASE("rescaling by curvature and volume ratio") {
    // a_j scales by r kappa^j
    CHECK(heat::scaled_coeff(3, 2, Rational(1, 4), Rational(8)) ==
          ExactScalar(Rational(1, 2), 4));
    CHECK(heat::scaled_coeff(3, 0, Rational(1, 4), Rational(8)) ==
          ExactScalar(Rational(16), 4));
    const auto list = heat::scaled_list(3, 3, Rational(1, 4), Rational(8));
    CHECK(list.n == 3);
    CHECK(list.values.size() == 4);
    for (int j = 0; j <= 3; ++j)
        CHECK(list.values[j] ==
              heat::scaled_coeff(3, j, Rational(1, 4), Rational(8)));
}

TEST_CASE("circle coefficient list") {
    const auto list = heat::circle_list(Rational(1, 2), 3);
    CHECK(list.n == 1);
    CHECK(list.values[0] == ExactScalar(Rational(1), 2));  // length pi
    for (int j = 1; j <= 3; ++j) CHECK(list.values[j].is_zero());
}

TEST_CASE("coefficient lists demand a uniform pi grade") {
    std::vector<ExactScalar> bad{ExactScalar(Rational(1), 2),
                                 ExactScalar(Rational(1), 3)};
    CHECK_THROWS(heat::CoeffList(1, std::move(bad)));
}

TEST_CASE("curvature route for the 4-cone log coefficient") {
    const double pi = std::numbers::pi;
    // unit 3-sphere: flat cone, no log term
    const auto unit = heat::CurvatureData3::constant_curvature(1.0, 2 * pi * pi);
    CHECK(std::abs(heat::geometric_log_term_4d(unit)) < 1e-15);
    // radius-2 sphere
    const auto r2 =
        heat::CurvatureData3::constant_curvature(0.25, 8 * 2 * pi * pi);
    CHECK(heat::geometric_log_term_4d(r2) ==
          doctest::Approx(-9.0 / 64.0).epsilon(1e-13));
}
