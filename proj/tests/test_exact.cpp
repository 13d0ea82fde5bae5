#include <doctest.h>

#include <cmath>

#include "heatcone/exact.hpp"

using namespace heatcone::exact;

TEST_CASE("factorial and binomial") {
    CHECK(factorial(0) == 1);
    CHECK(factorial(5) == 120);
    CHECK(factorial(12) == 479001600);
    CHECK(binomial(8, 3) == 56);
    CHECK(binomial(8, 0) == 1);
    CHECK(binomial(3, 5) == 0);
}

TEST_CASE("rational powers with negative exponents") {
    CHECK(pow_rational(Rational(2, 3), 3) == Rational(8, 27));
    CHECK(pow_rational(Rational(2, 3), -2) == Rational(9, 4));
    CHECK(pow_rational(Rational(5), 0) == 1);
    CHECK_THROWS(pow_rational(Rational(0), -1));
}

TEST_CASE("Bernoulli numbers") {
    CHECK(bernoulli(0) == 1);
    CHECK(bernoulli(1) == Rational(-1, 2));
    CHECK(bernoulli(2) == Rational(1, 6));
    CHECK(bernoulli(4) == Rational(-1, 30));
    CHECK(bernoulli(6) == Rational(1, 42));
    CHECK(bernoulli(12) == Rational(-691, 2730));
    CHECK(bernoulli(3) == 0);
    CHECK(bernoulli(17) == 0);
}

TEST_CASE("scalar arithmetic respects the pi grade") {
    const ExactScalar a(Rational(1, 2), 2);   // (1/2) pi
    const ExactScalar b(Rational(1, 3), 2);
    const ExactScalar c(Rational(1, 4), 3);
    CHECK((a + b) == ExactScalar(Rational(5, 6), 2));
    CHECK_THROWS_AS(a + c, GradeMismatch);
    CHECK((a * c) == ExactScalar(Rational(1, 8), 5));
    CHECK((a / c) == ExactScalar(Rational(2), -1));
    // zero is an identity at every grade
    const ExactScalar zero;
    CHECK((zero + c) == c);
    CHECK((a - a).is_zero());
    CHECK((a - a).pi_half_power() == 0);
    CHECK((a - a + c) == c);
}

TEST_CASE("scalar powers and rendering") {
    const ExactScalar a(Rational(2, 3), 1);
    CHECK(a.pow(2) == ExactScalar(Rational(4, 9), 2));
    CHECK(a.pow(-1) == ExactScalar(Rational(3, 2), -1));
    CHECK(a.pow(0) == ExactScalar(Rational(1)));
    CHECK(ExactScalar(Rational(-9, 64)).to_text() == "-9/64");
    CHECK(ExactScalar(Rational(1), 4).to_text() == "1/1·π^{4/2}");
}

TEST_CASE("to_double tracks the pi power") {
    const double pi = 3.14159265358979323846;
    CHECK(ExactScalar(Rational(3), 2).to_double() == doctest::Approx(3 * pi).epsilon(1e-15));
    CHECK(ExactScalar(Rational(1, 2), 1).to_double() ==
          doctest::Approx(0.5 * std::sqrt(pi)).epsilon(1e-15));
    CHECK(ExactScalar(Rational(1), -4).to_double() ==
          doctest::Approx(1 / (pi * pi)).epsilon(1e-15));
}

TEST_CASE("multiplicity polynomial coefficients") {
    // prod_{q<l} (v^2 - q^2) = sum K_i v^{2i}
    CHECK(k_coefficients(1) == std::vector<Rational>{Rational(1)});
    CHECK(k_coefficients(2) == std::vector<Rational>{Rational(-1), Rational(1)});
    CHECK(k_coefficients(3) ==
          std::vector<Rational>{Rational(4), Rational(-5), Rational(1)});
    CHECK(k_coefficients(4) == std::vector<Rational>{Rational(-36), Rational(49),
                                                     Rational(-14), Rational(1)});
    // evaluation identity: prod_{q<l} (l^2 - q^2) = l * (2l-1)!
    for (int l = 1; l <= 6; ++l) {
        Rational acc(0), p(1);
        const auto ks = k_coefficients(l);
        for (int i = 1; i <= l; ++i) {
            p *= l * l;
            acc += ks[i - 1] * p;
        }
        CHECK(acc == Rational(l) * Rational(factorial(2 * l - 1)));
    }
}

TEST_CASE("half-integer gamma values") {
    CHECK(gamma_half(0) == ExactScalar(Rational(1), 1));          // sqrt(pi)
    CHECK(gamma_half(1) == ExactScalar(Rational(1, 2), 1));
    CHECK(gamma_half(2) == ExactScalar(Rational(3, 4), 1));
    CHECK(gamma_half(3) == ExactScalar(Rational(15, 8), 1));
    CHECK(gamma_half(-1) == ExactScalar(Rational(-2), 1));
    CHECK(gamma_half(-2) == ExactScalar(Rational(4, 3), 1));
    // recurrence Gamma(l + 3/2) = (l + 1/2) Gamma(l + 1/2)
    for (int l = -4; l <= 4; ++l)
        CHECK(gamma_half(l + 1) == ExactScalar(Rational(2 * l + 1, 2)) * gamma_half(l));
}
