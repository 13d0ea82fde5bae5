#include <doctest.h>

#include <cmath>
#include <cstddef>
#include <numbers>

#include "heatcone/oracle.hpp"
#include "heatcone/zeta.hpp"

using namespace heatcone;
using exact::Rational;

namespace {
const double pi = std::numbers::pi;
}

TEST_CASE("sphere spectrum enumeration") {
    const auto sp = oracle::spectrum(Sphere{3, Rational(1), Rational(1)}, 100.0);
    REQUIRE(sp.entries.size() >= 3);
    CHECK(sp.entries[0].lambda == 0);
    CHECK(sp.entries[0].mult == 1);
    CHECK(sp.entries[1].lambda == 3);
    CHECK(sp.entries[1].mult == 4);
    CHECK(sp.entries[2].lambda == 8);
    CHECK(sp.entries[2].mult == 9);
    // (k+1)^2 in general
    for (std::size_t k = 0; k < sp.entries.size(); ++k)
        CHECK(sp.entries[k].mult == static_cast<std::int64_t>((k + 1) * (k + 1)));
    CHECK(sp.volume == doctest::Approx(2 * pi * pi).epsilon(1e-15));
}

TEST_CASE("projective spectrum enumeration") {
    const auto sp = oracle::spectrum(RealProjective{5}, 120.0);
    REQUIRE(sp.entries.size() >= 5);
    CHECK(sp.entries[0].lambda == 0);
    CHECK(sp.entries[0].mult == 1);
    CHECK(sp.entries[1].lambda == 12);
    CHECK(sp.entries[1].mult == 20);
    CHECK(sp.entries[2].lambda == 32);
    CHECK(sp.entries[2].mult == 105);
    CHECK(sp.entries[3].lambda == 60);
    CHECK(sp.entries[3].mult == 336);
    CHECK(sp.entries[4].lambda == 96);
    CHECK(sp.entries[4].mult == 825);
}

TEST_CASE("rescaled spheres must be geometrically consistent") {
    CHECK_NOTHROW(oracle::spectrum(Sphere{3, Rational(1, 4), Rational(8)}, 10.0));
    CHECK_THROWS_AS(oracle::spectrum(Sphere{3, Rational(1, 4), Rational(7)}, 10.0),
                    std::invalid_argument);
    const auto sp = oracle::spectrum(Sphere{3, Rational(1, 4), Rational(8)}, 10.0);
    CHECK(sp.entries[1].lambda == doctest::Approx(0.75).epsilon(1e-15));
}

TEST_CASE("torus spectrum skips empty norms") {
    const auto sp = oracle::spectrum(FlatTorus{3, Rational(1)}, 4 * pi * pi * 10);
    // norm 7 is not a sum of three squares
    CHECK(sp.entries[0].lambda == 0);
    CHECK(sp.entries[0].mult == 1);
    CHECK(sp.entries[1].mult == 6);
    CHECK(sp.entries[7].lambda == doctest::Approx(4 * pi * pi * 8).epsilon(1e-14));
    CHECK(sp.entries[7].mult == 12);
}

TEST_CASE("geometries without an enumeration throw") {
    CHECK_THROWS_AS(oracle::spectrum(Lens{3}, 10.0), std::invalid_argument);
    CHECK_THROWS_AS(oracle::spectrum(SpaceForm{3, Rational(1, 8)}, 10.0),
                    std::invalid_argument);
}

TEST_CASE("partial heat trace on a toy spectrum") {
    ExplicitSpectrum toy;
    toy.lines = {{0.0, 1}, {1.0, 2}, {5.0, 3}};
    const auto sp = oracle::spectrum(toy, 100.0);
    const double got = oracle::heat_trace_partial(sp, 0.7);
    const double want = 1 + 2 * std::exp(-0.7) + 3 * std::exp(-3.5);
    CHECK(got == doctest::Approx(want).epsilon(1e-15));
}

TEST_CASE("truncation bound really bounds the dropped tail") {
    const auto coarse = oracle::spectrum(Sphere{3, Rational(1), Rational(1)}, 50.0);
    const auto fine = oracle::spectrum(Sphere{3, Rational(1), Rational(1)}, 4000.0);
    for (double t : {0.3, 0.7, 1.5}) {
        const double dropped = oracle::heat_trace_partial(fine, t) -
                               oracle::heat_trace_partial(coarse, t);
        CHECK(dropped >= 0);
        CHECK(oracle::truncation_bound(coarse, t) >= dropped);
    }
}

TEST_CASE("theta identity pins the torus trace") {
    // sum over Z^3 of e^{-4 pi^2 j t} equals (4 pi t)^{-3/2} up to an
    // exponentially small error; this also walks the parallel path
    const double scale = 4 * pi * pi;
    const auto sp = oracle::spectrum(FlatTorus{3, Rational(1)}, scale * 80000);
    CHECK(sp.entries.size() >= (std::size_t{1} << 16));
    const double t = 2e-5;
    const double got = oracle::heat_trace_partial(sp, t);
    CHECK(got * std::pow(4 * pi * t, 1.5) == doctest::Approx(1.0).epsilon(1e-10));
    // repeatable bit for bit
    CHECK(oracle::heat_trace_partial(sp, t) == got);
}

TEST_CASE("Dirichlet sums against closed forms") {
    const auto circle =
        oracle::spectrum(Circle{zeta::Beta::from_rational(Rational(1))}, 4e4);
    CHECK(oracle::dirichlet_sum(circle, 0.0, 2.0) ==
          doctest::Approx(2 * zeta::zeta_exact(4).to_double()).epsilon(1e-10));
    const auto s3 = oracle::spectrum(Sphere{3, Rational(1), Rational(1)}, 4e4);
    CHECK(oracle::dirichlet_sum(s3, 1.0, 3.0) ==
          doctest::Approx(zeta::zeta_exact(4).to_double()).epsilon(1e-10));
    CHECK(oracle::dirichlet_sum(s3, 1.0, 2.0) ==
          doctest::Approx(zeta::zeta_exact(2).to_double()).epsilon(1e-10));
}

TEST_CASE("Dirichlet certification failures") {
    const auto s3 = oracle::spectrum(Sphere{3, Rational(1), Rational(1)}, 1e3);
    CHECK_THROWS_AS(oracle::dirichlet_sum(s3, 1.0, 1.2), std::runtime_error);
    ExplicitSpectrum toy;
    toy.lines = {{0.0, 1}, {99.9, 2}};
    const auto open_end = oracle::spectrum(toy, 100.0);
    CHECK_THROWS_AS(oracle::dirichlet_sum(open_end, 1.0, 3.0), std::runtime_error);
    toy.lines = {{0.0, 1}, {5.0, 2}};
    const auto closed_end = oracle::spectrum(toy, 100.0);
    CHECK(oracle::dirichlet_sum(closed_end, 1.0, 3.0) ==
          doctest::Approx(1 + 2 * std::pow(6.0, -3.0)).epsilon(1e-14));
}

TEST_CASE("coefficient fit validates its grid") {
    std::vector<double> bad{0.2, 0.1};
    CHECK_THROWS_AS(
        oracle::fit_heat_coeffs(Sphere{3, Rational(1), Rational(1)}, 1, bad, 1e4),
        std::invalid_argument);
    std::vector<double> good;
    for (int i = 0; i <= 8; ++i) good.push_back(0.02 * std::pow(10.0, i / 8.0));
    CHECK_THROWS_AS(
        oracle::fit_heat_coeffs(Sphere{3, Rational(1), Rational(1)}, 1, good, 50.0),
        std::invalid_argument);
}

TEST_CASE("circle fit recovers the circumference and nothing else") {
    std::vector<double> grid;
    for (int i = 0; i <= 8; ++i) grid.push_back(0.02 * std::pow(10.0, i / 8.0));
    const auto f = oracle::fit_heat_coeffs(
        Circle{zeta::Beta::from_rational(Rational(1))}, 1, grid, 1e4);
    CHECK(f[0] == doctest::Approx(2 * pi).epsilon(1e-6));
    CHECK(std::abs(f[1]) < 1e-4);
}

TEST_CASE("Richardson residue extraction") {
    const auto simple = oracle::numeric_residue(
        [](double s) { return 1.0 / (s - 2.0) + std::cos(s); }, 2.0);
    CHECK(simple.value == doctest::Approx(1.0).epsilon(1e-9));
    const auto gamma = oracle::numeric_residue(
        [](double s) { return std::tgamma(s); }, 0.0);
    CHECK(gamma.value == doctest::Approx(1.0).epsilon(1e-9));
    const auto gamma1 = oracle::numeric_residue(
        [](double s) { return std::tgamma(s); }, -1.0);
    CHECK(gamma1.value == doctest::Approx(-1.0).epsilon(1e-9));
    // no pole: the residue is zero
    const auto none = oracle::numeric_residue(
        [](double s) { return std::exp(s); }, 0.0);
    CHECK(std::abs(none.value) < 1e-8);
}
