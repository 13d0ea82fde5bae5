#include <doctest.h>

#include <cmath>
#include <numbers>

#include "heatcone/zeta.hpp"

using namespace heatcone;
using exact::ExactScalar;
using exact::Rational;

TEST_CASE("Riemann zeta closed forms") {
    CHECK(zeta::zeta_exact(0) == ExactScalar(Rational(-1, 2)));
    CHECK(zeta::zeta_exact(-1) == ExactScalar(Rational(-1, 12)));
    CHECK(zeta::zeta_exact(-3) == ExactScalar(Rational(1, 120)));
    CHECK(zeta::zeta_exact(-2) == ExactScalar());
    CHECK(zeta::zeta_exact(2) == ExactScalar(Rational(1, 6), 4));
    CHECK(zeta::zeta_exact(4) == ExactScalar(Rational(1, 90), 8));
    CHECK(zeta::zeta_exact(6) == ExactScalar(Rational(1, 945), 12));
    CHECK_THROWS_AS(zeta::zeta_exact(1), zeta::PoleHit);
    CHECK_THROWS_AS(zeta::zeta_exact(3), zeta::NonExactPoint);
}

TEST_CASE("numeric zeta against the closed forms") {
    for (long z : {-5L, -3L, -1L, 0L, 2L, 4L, 6L, 8L})
        CHECK(zeta::riemann_zeta_numeric(double(z)) ==
              doctest::Approx(zeta::zeta_exact(z).to_double()).epsilon(1e-13));
    CHECK(zeta::riemann_zeta_numeric(0.5) ==
          doctest::Approx(-1.4603545088095868).epsilon(1e-13));
    CHECK(zeta::riemann_zeta_numeric(3.0) ==
          doctest::Approx(1.2020569031595943).epsilon(1e-13));
}

TEST_CASE("Hurwitz zeta") {
    CHECK(zeta::hurwitz_zeta_numeric(2.0, 1.0) ==
          doctest::Approx(std::numbers::pi * std::numbers::pi / 6).epsilon(1e-13));
    CHECK(zeta::hurwitz_zeta_numeric(3.0, 2.0) ==
          doctest::Approx(1.2020569031595943 - 1.0).epsilon(1e-12));
    // direct slow sum cross-check
    double direct = 0;
    for (int k = 200000; k-- > 0;) direct += std::pow(10.25 + k, -2.5);
    direct += std::pow(200000 + 10.25, -1.5) / 1.5;  // integral tail
    CHECK(zeta::hurwitz_zeta_numeric(2.5, 10.25) ==
          doctest::Approx(direct).epsilon(1e-8));
}

TEST_CASE("circle combination") {
    const auto combo = zeta::circle_combo(zeta::Beta::from_rational(Rational(1, 2)));
    // 2 (1/2)^{2s} zeta(2s) at s = -1/2 is 4 zeta(-1) = -1/3
    CHECK(zeta::combo_value(combo, Rational(-1, 2)) == ExactScalar(Rational(-1, 3)));
    CHECK_THROWS_AS(zeta::combo_value(combo, Rational(1, 2)), zeta::PoleHit);
    CHECK(zeta::combo_residue(combo, Rational(1, 2), zeta::Convention::zeta_argument) ==
          ExactScalar(Rational(1)));
    CHECK(zeta::combo_residue(combo, Rational(1, 2), zeta::Convention::s_variable) ==
          ExactScalar(Rational(1, 2)));
    // no pole elsewhere
    CHECK(zeta::combo_residue(combo, Rational(-1, 2), zeta::Convention::s_variable)
              .is_zero());
    CHECK(zeta::combo_value_numeric(combo, 3.0) ==
          doctest::Approx((2.0 / 64.0) * zeta::zeta_exact(6).to_double())
              .epsilon(1e-13));
}

TEST_CASE("sphere combination values") {
    const auto s3 = zeta::sphere_combo(3);
    CHECK(zeta::combo_value(s3, Rational(-1, 2)) == ExactScalar(Rational(1, 120)));
    CHECK(zeta::combo_value(s3, Rational(-3, 2)) == ExactScalar(Rational(-1, 252)));
    CHECK(zeta::combo_residue(s3, Rational(3, 2), zeta::Convention::s_variable) ==
          ExactScalar(Rational(1, 2)));
    // shifted 3-sphere zeta is zeta(2s-2); spot-check numerically at s = 3
    CHECK(zeta::combo_value_numeric(s3, 3.0) ==
          doctest::Approx(zeta::zeta_exact(4).to_double()).epsilon(1e-13));
}

TEST_CASE("projective combination value") {
    CHECK(zeta::combo_value(zeta::rpn_combo(5), Rational(-1, 2)) ==
          ExactScalar(Rational(-61, 3780)));
}

TEST_CASE("residue conventions differ by the chain rule factor") {
    for (int n : {3, 5, 9}) {
        const auto combo = zeta::sphere_combo(n);
        for (int l = 0; l <= (n + 1) / 2; ++l) {
            const Rational s0 = Rational(n, 2) - l;
            const auto zarg =
                zeta::combo_residue(combo, s0, zeta::Convention::zeta_argument);
            const auto svar =
                zeta::combo_residue(combo, s0, zeta::Convention::s_variable);
            CHECK(zarg == svar * ExactScalar(Rational(2)));
        }
    }
}

TEST_CASE("residues from heat coefficients") {
    const auto s3 = heat::sphere_list(3, 2);
    CHECK(zeta::residue_from_heat(s3, Rational(1), 0) == ExactScalar(Rational(1, 2)));
    CHECK(zeta::residue_from_heat(s3, Rational(1), 1).is_zero());
    CHECK(zeta::residue_from_heat(s3, Rational(1), 2).is_zero());
    const auto s5 = heat::sphere_list(5, 3);
    CHECK(zeta::residue_from_heat(s5, Rational(2), 0) == ExactScalar(Rational(1, 24)));
    CHECK(zeta::residue_from_heat(s5, Rational(2), 1) == ExactScalar(Rational(-1, 24)));
    CHECK(zeta::residue_from_heat(s5, Rational(2), 2).is_zero());
    CHECK(zeta::residue_from_heat(s5, Rational(2), 3).is_zero());
    // projective space halves every coefficient
    const auto rp5 = heat::scaled_list(5, 0, Rational(1), Rational(1, 2));
    CHECK(zeta::residue_from_heat(rp5, Rational(2), 0) == ExactScalar(Rational(1, 48)));
}

TEST_CASE("upper incomplete gamma") {
    // Gamma(3, x) = (x^2 + 2x + 2) e^{-x}
    CHECK(zeta::upper_gamma(3.0, 2.0) ==
          doctest::Approx(10 * std::exp(-2.0)).epsilon(1e-12));
    // Gamma(1/2, 1) = sqrt(pi) erfc(1)
    CHECK(zeta::upper_gamma(0.5, 1.0) ==
          doctest::Approx(std::sqrt(std::numbers::pi) * std::erfc(1.0))
              .epsilon(1e-12));
    // recurrence Gamma(s+1, x) = s Gamma(s, x) + x^s e^{-x}
    for (double s : {-1.5, -0.5, 0.75, 2.5})
        for (double x : {0.3, 1.0, 7.0})
            CHECK(zeta::upper_gamma(s + 1, x) ==
                  doctest::Approx(s * zeta::upper_gamma(s, x) +
                                  std::pow(x, s) * std::exp(-x))
                      .epsilon(1e-11));
}
