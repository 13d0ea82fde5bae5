#include "heatcone/zeta.hpp"

#include "heatcone/fp.hpp"

#include <cmath>
#include <numbers>

namespace heatcone::zeta {

using exact::bernoulli;
using exact::factorial;
using exact::gamma_half;
using exact::Int;
using exact::k_coefficients;
using exact::pow_rational;

Combo circle_combo(const Beta& sin_alpha) {
    if (sin_alpha.value() <= 0 || sin_alpha.value() > 1)
        throw std::domain_error("sin_alpha must lie in (0, 1]");
    Combo c;
    c.terms.push_back({ExactScalar(Rational(2)), sin_alpha, 0});
    return c;
}

Combo sphere_combo(int n) {
    if (n < 3 || n % 2 == 0) throw std::domain_error("sphere_combo needs odd n >= 3");
    const int u = (n - 1) / 2;
    const auto K = k_coefficients(u);
    const Rational pref(2, factorial(static_cast<unsigned>(2 * u)));
    Combo c;
    for (int i = 1; i <= u; ++i)
        c.terms.push_back({ExactScalar(pref * K[i - 1]), Beta::from_rational(Rational(1)), i});
    return c;
}

Combo rpn_combo(int n) {
    if (n < 5 || n % 4 != 1) throw std::domain_error("rpn_combo needs n = 4v + 1");
    const int v = (n - 1) / 4;
    const auto K = k_coefficients(2 * v);
    const Rational fact(factorial(static_cast<unsigned>(4 * v)));
    Combo c;
    for (int i = 1; i <= 2 * v; ++i) {
        Rational coeff = Rational(Int(1) << (2 * i + 1)) / fact * K[i - 1];
        c.terms.push_back({ExactScalar(coeff), Beta::from_rational(Rational(1, 2)), i});
    }
    return c;
}

ExactScalar zeta_exact(long z) {
    if (z == 1) throw PoleHit("zeta pole at argument 1");
    if (z <= 0) {
        // zeta(-d) = (-1)^d B_{d+1} / (d+1); odd Bernoulli numbers make the
        // even negative arguments vanish automatically.
        const unsigned d = static_cast<unsigned>(-z);
        Rational r = bernoulli(d + 1) / Rational(d + 1);
        if (d % 2 == 1) r = -r;
        return ExactScalar(r);
    }
    if (z % 2 != 0) throw NonExactPoint("no closed form at odd argument " + std::to_string(z));
    const unsigned k = static_cast<unsigned>(z / 2);
    Rational r = bernoulli(2 * k) * Rational(Int(1) << (2 * k), 2 * factorial(2 * k));
    if (k % 2 == 0) r = -r;
    return ExactScalar(r, static_cast<int>(2 * z));
}

namespace {

long integral_twice(const Rational& s) {
    const Rational two_s = s * 2;
    if (boost::multiprecision::denominator(two_s) != 1)
        throw std::domain_error("point must be an integer or half-integer");
    return boost::multiprecision::numerator(two_s).convert_to<long>();
}

}  // namespace

ExactScalar combo_value(const Combo& c, const Rational& s) {
    const long two_s = integral_twice(s);
    ExactScalar sum;
    try {
        for (const auto& t : c.terms) {
            if (!t.beta.exact) throw NonExactPoint("numeric beta has no exact evaluation");
            const ExactScalar z = zeta_exact(two_s - 2 * t.i);
            sum += t.coeff * ExactScalar(pow_rational(t.beta.r, two_s)) * z;
        }
    } catch (const exact::GradeMismatch&) {
        throw NonExactPoint("terms land on different pi grades; use the numeric path");
    }
    return sum;
}

double combo_value_numeric(const Combo& c, double s) {
    double sum = 0;
    for (const auto& t : c.terms) {
        const double z = 2 * s - 2 * t.i;
        if (std::abs(z - 1.0) < 1e-12) throw PoleHit("zeta pole at argument 1");
        sum += t.coeff.to_double() * std::pow(t.beta.value(), 2 * s) * riemann_zeta_numeric(z);
    }
    return sum;
}

ExactScalar combo_residue(const Combo& c, const Rational& s0, Convention conv) {
    const long two_s0 = integral_twice(s0);
    ExactScalar sum;
    for (const auto& t : c.terms) {
        if (two_s0 - 2 * t.i != 1) continue;
        if (!t.beta.exact) throw NonExactPoint("numeric beta has no exact residue");
        sum += t.coeff * ExactScalar(pow_rational(t.beta.r, two_s0));
    }
    if (conv == Convention::s_variable) sum *= ExactScalar(Rational(1, 2));
    return sum;
}

double combo_residue_numeric(const Combo& c, double s0, Convention conv) {
    double sum = 0;
    for (const auto& t : c.terms) {
        if (std::abs(2 * s0 - 2 * t.i - 1.0) > 1e-9) continue;
        sum += t.coeff.to_double() * std::pow(t.beta.value(), 2 * s0);
    }
    return conv == Convention::s_variable ? 0.5 * sum : sum;
}

ExactScalar residue_from_heat(const heat::CoeffList& a, const Rational& shift, int l) {
    if (l < 0) throw std::domain_error("negative pole index");
    if (static_cast<std::size_t>(l) >= a.values.size())
        throw std::domain_error("coefficient list too short for pole index");
    const int n = a.n;
    ExactScalar gamma;
    if (n % 2 == 1) {
        gamma = gamma_half((n - 1) / 2 - l);
    } else {
        const int p = n / 2 - l;
        if (p <= 0) return ExactScalar();  // 1/Gamma kills the residue
        gamma = ExactScalar(Rational(factorial(static_cast<unsigned>(p - 1))));
    }
    const ExactScalar four_pi_pow(Rational(Int(1) << n), n);
    const Rational neg_q2 = -shift * shift;
    ExactScalar sum;
    for (int i = 0; i <= l; ++i)
        sum += ExactScalar(pow_rational(neg_q2, i) / Rational(factorial(static_cast<unsigned>(i)))) *
               a.values[l - i];
    return sum / (four_pi_pow * gamma);
}

namespace {

template <typename Real>
Real euler_maclaurin_tail(Real s, Real A) {
    // A^{1-s}/(s-1) + A^{-s}/2 + sum_{r<=10} B_{2r}/(2r)! (s)_{2r-1} A^{-s-2r+1}
    Real acc = std::pow(A, Real(1) - s) / (s - 1) + std::pow(A, -s) / 2;
    for (int r = 1; r <= 10; ++r) {
        Real poch = 1;
        for (int j = 0; j <= 2 * r - 2; ++j) poch *= s + j;
        const Real b = Real(bernoulli(2 * r).convert_to<double>()) /
                       Real(factorial(2 * r).convert_to<double>());
        acc += b * poch * std::pow(A, -s - 2 * r + 1);
    }
    return acc;
}

template <typename Real>
Real zeta_em_impl(Real s, Real a, int lift) {
    Real acc = 0;
    for (int k = 0; k < lift; ++k) acc += std::pow(a + k, -s);
    return acc + euler_maclaurin_tail<Real>(s, a + lift);
}

}  // namespace

double riemann_zeta_numeric(double s) {
    if (std::abs(s - 1.0) < 1e-14) throw std::domain_error("zeta pole at s = 1");
    if (s <= -10 || s >= 40) throw std::domain_error("s outside the supported window (-10, 40)");
    if (s < -0.5) {
        // The direct sum cancels catastrophically at negative s; reflect into
        // the half plane where every term is O(1).
        const double pi = std::numbers::pi;
        return std::pow(2 * pi, s) / pi * std::sin(pi * s / 2) * std::tgamma(1 - s) *
               riemann_zeta_numeric(1 - s);
    }
    if (fp::extended_precision())
        return static_cast<double>(zeta_em_impl<long double>(s, 1.0L, 49));
    return zeta_em_impl<double>(s, 1.0, 49);
}

double hurwitz_zeta_numeric(double s, double a) {
    if (a <= 0) throw std::domain_error("hurwitz zeta needs a > 0");
    if (std::abs(s - 1.0) < 1e-14) throw std::domain_error("zeta pole at s = 1");
    const int lift = a >= 32 ? 0 : static_cast<int>(std::ceil(32 - a));
    if (fp::extended_precision())
        return static_cast<double>(zeta_em_impl<long double>(s, static_cast<long double>(a), lift));
    return zeta_em_impl<double>(s, a, lift);
}

}  // namespace heatcone::zeta
