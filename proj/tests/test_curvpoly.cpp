#include <doctest.h>

#include <cmath>

#include "heatcone/curvpoly.hpp"
#include "heatcone/heat_coeffs.hpp"
#include "heatcone/singular.hpp"

using namespace heatcone;
using exact::ExactScalar;
using exact::Rational;

TEST_CASE("assembled polynomial matches the log-term route pointwise") {
    for (int n : {3, 5, 7, 9}) {
        const auto p = curvpoly::build(n, Rational(1));
        CHECK(p.coeffs.size() == static_cast<std::size_t>((n + 1) / 2) + 1);
        for (const Rational kap :
             {Rational(0), Rational(1), Rational(4), Rational(-2), Rational(1, 3)}) {
            const auto via_poly = curvpoly::evaluate(p, kap);
            const auto direct = singular::log_term(
                heat::scaled_list(n, (n + 1) / 2, kap, Rational(1)), n + 1);
            CHECK(via_poly == direct);
        }
    }
}

TEST_CASE("volume ratio only scales the polynomial") {
    const auto unit = curvpoly::build(5, Rational(1));
    const auto fifth = curvpoly::build(5, Rational(1, 5));
    CHECK(unit.normalized == fifth.normalized);
    for (std::size_t j = 0; j < unit.coeffs.size(); ++j)
        CHECK(fifth.coeffs[j] * ExactScalar(Rational(5)) == unit.coeffs[j]);
}

TEST_CASE("normal forms") {
    auto norm_of = [](int n) {
        std::vector<long> out;
        for (const auto& c : curvpoly::build(n, Rational(1)).normalized)
            out.push_back(c.convert_to<long>());
        return out;
    };
    CHECK(norm_of(3) == std::vector<long>{1, -2, 1});
    CHECK(norm_of(5) == std::vector<long>{1, -4, 5, -2});
    CHECK(norm_of(7) == std::vector<long>{109, -668, 1414, -1260, 405});
}

TEST_CASE("roots with exact representations") {
    const auto r3 = curvpoly::roots(curvpoly::build(3, Rational(1)));
    REQUIRE(r3.size() == 1);
    CHECK(r3[0].mult == 2);
    REQUIRE(r3[0].exact_rational.has_value());
    CHECK(*r3[0].exact_rational == 1);

    const auto r5 = curvpoly::roots(curvpoly::build(5, Rational(1)));
    REQUIRE(r5.size() == 2);
    CHECK(r5[0].mult == 2);
    CHECK(*r5[1].exact_rational == 2);

    const auto r7 = curvpoly::roots(curvpoly::build(7, Rational(1)));
    REQUIRE(r7.size() == 3);
    CHECK(r7[0].mult == 2);
    REQUIRE(r7[1].exact_radical.has_value());
    REQUIRE(r7[2].exact_radical.has_value());
    CHECK(r7[1].exact_radical->p == Rational(225, 109));
    CHECK(r7[1].exact_radical->q == Rational(-36, 109));
    CHECK(r7[1].exact_radical->d == 5);
    CHECK(r7[2].exact_radical->q == Rational(36, 109));
    CHECK(r7[1].value ==
          doctest::Approx((225 - 36 * std::sqrt(5.0)) / 109).epsilon(1e-14));
    // roots really kill the polynomial
    const auto p = curvpoly::build(7, Rational(1));
    double horner = 0;
    for (auto it = p.normalized.begin(); it != p.normalized.end(); ++it)
        horner = horner * r7[2].value + it->convert_to<double>();
    CHECK(std::abs(horner) < 1e-9);
}

TEST_CASE("roots in ascending order") {
    for (int n : {5, 7, 9, 11}) {
        const auto rs = curvpoly::roots(curvpoly::build(n, Rational(1)));
        for (std::size_t i = 1; i < rs.size(); ++i)
            CHECK(rs[i - 1].value < rs[i].value);
    }
}

TEST_CASE("beyond the proved range the curvature-one root stays double") {
    for (int n : {9, 11}) {
        const auto rs = curvpoly::roots(curvpoly::build(n, Rational(1)));
        bool found = false;
        for (const auto& r : rs)
            if (r.exact_rational && *r.exact_rational == 1) {
                found = true;
                CHECK(r.mult == 2);
            }
        CHECK(found);
    }
}

TEST_CASE("radical to_double") {
    curvpoly::QuadraticRadical rad;
    rad.p = Rational(225, 109);
    rad.q = Rational(-36, 109);
    rad.d = 5;
    CHECK(rad.to_double() ==
          doctest::Approx((225 - 36 * std::sqrt(5.0)) / 109).epsilon(1e-15));
}
