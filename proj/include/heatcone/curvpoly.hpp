#pragma once

#include "heatcone/exact.hpp"

#include <optional>
#include <vector>

namespace heatcone::curvpoly {

using exact::ExactScalar;
using exact::Int;
using exact::Rational;

// Exact quadratic irrational (p + q sqrt(d)) / r with d squarefree > 1.
struct QuadraticRadical {
    Rational p;
    Rational q;
    Int d{0};

    double to_double() const;
};

struct Root {
    double value = 0;
    int mult = 1;
    std::optional<Rational> exact_rational;
    std::optional<QuadraticRadical> exact_radical;

    bool is_exact() const { return exact_rational || exact_radical; }
};

// Log coefficient of the (n+1)-cone over the curvature-kappa n-sphere as a
// polynomial in kappa.  coeffs[j] multiplies kappa^j (exact, degree
// (n+1)/2); normalized holds the primitive integer coefficient vector with
// positive leading term, highest degree first, common scale divided out.
struct CurvaturePolynomial {
    int n = 0;
    std::vector<ExactScalar> coeffs;
    std::vector<Rational> normalized;
};

// Direct construction from the log-term formula applied to scaled
// coefficients; the volume ratio only scales the polynomial.
CurvaturePolynomial build(int n, const Rational& vol_ratio);

// Exact evaluation of the un-normalized polynomial at rational kappa.
ExactScalar evaluate(const CurvaturePolynomial& p, const Rational& kappa);

// All real roots of the normalized polynomial, ascending.  The known factor
// (kappa - 1)^mult is removed by exact synthetic division first; what
// remains is solved exactly through degree two (rational or quadratic
// radical) and numerically (bisection plus Newton polish to 1e-12) above.
std::vector<Root> roots(const CurvaturePolynomial& p);

}  // namespace heatcone::curvpoly
