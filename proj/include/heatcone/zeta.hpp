#pragma once

#include "heatcone/exact.hpp"
#include "heatcone/heat_coeffs.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace heatcone::zeta {

using exact::ExactScalar;
using exact::Rational;

// Evaluation landed on a pole of the Riemann zeta factor.
struct PoleHit : std::runtime_error {
    explicit PoleHit(const std::string& what) : std::runtime_error(what) {}
};

// The requested point has no exact closed form in this representation
// (odd zeta argument >= 3, numeric beta, or mixed pi grades); callers
// should switch to the numeric path.
struct NonExactPoint : std::runtime_error {
    explicit NonExactPoint(const std::string& what) : std::runtime_error(what) {}
};

// Scale parameter of a combo term; either an exact rational or a float.
struct Beta {
    bool exact = true;
    Rational r{1};
    double f = 1.0;

    static Beta from_rational(Rational v) {
        Beta b;
        b.exact = true;
        b.f = v.convert_to<double>();
        b.r = std::move(v);
        return b;
    }
    static Beta from_double(double v) {
        Beta b;
        b.exact = false;
        b.f = v;
        return b;
    }
    double value() const { return exact ? r.convert_to<double>() : f; }
};

// One term coeff * beta^{2s} * zeta_R(2s - 2i) of a spectral zeta function.
struct Term {
    ExactScalar coeff;
    Beta beta;
    int i = 0;
};

struct Combo {
    std::vector<Term> terms;
};

// Residue normalization.  A pole of zeta_R(z) at z = 1 sits at s = i + 1/2;
// the residue in the zeta argument z is coeff * beta^{2s0}, while the chain
// rule z = 2s - 2i makes the residue in s exactly half of that.
enum class Convention { s_variable, zeta_argument };

// Flat circle of radius sin_alpha (cross-section of a surface cone):
// zeta_N(s) = 2 sin_alpha^{2s} zeta_R(2s).
Combo circle_combo(const Beta& sin_alpha);

// Unit n-sphere shifted by (n-1)/2, odd n >= 3:
// zeta(s) = (2/(2u)!) sum_i K_i^{(u)} zeta_R(2s - 2i), u = (n-1)/2.
Combo sphere_combo(int n);

// Real projective space shifted by (n-1)/2, n = 4v + 1:
// zeta(s) = sum_i (2^{2i+1}/(4v)!) K_i^{(2v)} (1/2)^{2s} zeta_R(2s - 2i).
Combo rpn_combo(int n);

// Riemann zeta at an integer argument where a closed form exists:
// z <= 0 rational via Bernoulli numbers, even z >= 2 rational times pi^z.
// Throws PoleHit at z = 1 and NonExactPoint at odd z >= 3.
ExactScalar zeta_exact(long z);

// Exact evaluation at s with 2s integral.  Throws PoleHit on a pole and
// NonExactPoint when any term needs a numeric value or the terms carry
// incompatible pi grades.
ExactScalar combo_value(const Combo& c, const Rational& s);
double combo_value_numeric(const Combo& c, double s);

// Sum of residues of the combo at s0 (zero if no term has a pole there).
// Exact path requires exact betas.
ExactScalar combo_residue(const Combo& c, const Rational& s0, Convention conv);
double combo_residue_numeric(const Combo& c, double s0, Convention conv);

// s-variable residue of the shifted zeta of an n-manifold at s = n/2 - l,
// from its heat coefficients:
//   Res = (1/((4 pi)^{n/2} Gamma(n/2 - l))) sum_{i=0}^{l} (-q^2)^i a_{l-i} / i!
// where q is the shift.  Returns 0 when Gamma(n/2 - l) has a pole.
ExactScalar residue_from_heat(const heat::CoeffList& a, const Rational& shift, int l);

// Riemann zeta by Euler--Maclaurin with 49 direct terms and 10 correction
// terms; valid for real s in (-10, 40), s != 1.
double riemann_zeta_numeric(double s);

// Hurwitz zeta sum_{k>=0} (a+k)^{-s} for a > 0, s > 1, by the same scheme.
double hurwitz_zeta_numeric(double s, double a);

// Upper incomplete gamma Gamma(s, x) for real s and x > 0.
double upper_gamma(double s, double x);

// Number of integer lattice points of norm squared j in dimension n, for
// j = 0..jmax, by iterated convolution of the one-dimensional counts.
std::vector<long long> lattice_counts(int n, int jmax);

// Analytic continuation of the Epstein-type zeta of the flat torus
// cross-section, E(s) = sum_{k in Z^n} (4 pi^2 |k|^2 + shift^2)^{-s},
// valid on s > n/2 - 6 away from poles.  Throws on nonconvergence.
double epstein_value(int n, double shift, double s);

// s-variable residue of E at s = n/2 - pole_j, read off the explicit pole of
// the continuation: (4 pi)^{-n/2} (-shift^2)^j / (j! Gamma(n/2 - j)).
// pole_j < 0 selects the pole at s = -1/2, i.e. j = (n+1)/2.  The series
// part of the continuation is validated numerically first.
double epstein_residue_prefactor(int n, double shift, int pole_j = -1);

// Published closed form of the torus residue, kept verbatim for
// cross-checking.  Poles sit at half-integers s = n/2 - j.  At s = -1/2 the
// simplified form (-1)^{(n+1)/2} (n-1)^{n+1} / (2^{2n+2} pi^{n+1/2} ((n+1)/2)!)
// is returned; at the other poles the general tabulated expression
// (-1)^{(n+2s)/2} pi^{s/2} ((n-1)/2)^{n-2s} / ((2 pi)^n Gamma(s) Gamma(n/2-s+1)).
// Throws std::domain_error off the pole set.
double epstein_residue_published(int n, const Rational& s);

}  // namespace heatcone::zeta
