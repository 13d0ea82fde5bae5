#include "heatcone/curvpoly.hpp"

#include "heatcone/heat_coeffs.hpp"
#include "heatcone/singular.hpp"

#include <algorithm>
#include <cmath>

namespace heatcone::curvpoly {

using exact::factorial;
using exact::pow_rational;

double QuadraticRadical::to_double() const {
    return (p.convert_to<double>() + q.convert_to<double>() * std::sqrt(d.convert_to<double>())) /
           1.0;
}

CurvaturePolynomial build(int n, const Rational& vol_ratio) {
    if (n < 3 || n % 2 == 0) throw std::domain_error("build needs odd n >= 3");
    if (vol_ratio <= 0) throw std::domain_error("volume ratio must be positive");
    const int m = n + 1;
    const int deg = m / 2;
    CurvaturePolynomial p;
    p.n = n;
    p.coeffs.resize(deg + 1);
    // c(kappa) = pref * sum_k (-1)^{k+1} (m-2)^{2k}/(4^k k!) * r a_j(unit) kappa^j,  j = m/2 - k
    const ExactScalar pref(Rational(1, exact::Int(2) << m), -m);
    for (int k = 0; k <= deg; ++k) {
        const int j = deg - k;
        Rational w = pow_rational(Rational(m - 2), 2 * k) /
                     (pow_rational(Rational(4), k) * Rational(factorial(static_cast<unsigned>(k))));
        if (k % 2 == 0) w = -w;
        p.coeffs[j] = pref * ExactScalar(w * vol_ratio) * heat::sphere_coeff(n, j);
    }

    // Strip the shared pi grade and common rational scale; highest first.
    std::vector<Rational> norm(deg + 1);
    for (int j = 0; j <= deg; ++j) norm[deg - j] = p.coeffs[j].rational_part();
    // s = gcd(numerators)/lcm(denominators); dividing by s makes the vector
    // primitive integer.
    exact::Int g = 0, l = 1;
    for (const auto& r : norm) {
        if (r == 0) continue;
        g = boost::multiprecision::gcd(g, boost::multiprecision::numerator(r));
        const exact::Int den = boost::multiprecision::denominator(r);
        l = l / boost::multiprecision::gcd(l, den) * den;
    }
    if (g == 0) throw std::logic_error("zero curvature polynomial");
    Rational s(g, l);
    if (norm.front() < 0) s = -s;
    for (auto& r : norm) r /= s;
    p.normalized = std::move(norm);
    return p;
}

ExactScalar evaluate(const CurvaturePolynomial& p, const Rational& kappa) {
    ExactScalar acc;
    for (int j = static_cast<int>(p.coeffs.size()) - 1; j >= 0; --j)
        acc = acc * ExactScalar(kappa) + p.coeffs[j];
    return acc;
}

namespace {

double eval_double(const std::vector<double>& c, double x) {
    double acc = 0;
    for (const double ci : c) acc = acc * x + ci;
    return acc;
}

// Divides by (x - 1); returns the quotient, sets exact to whether the
// remainder vanished.
std::vector<Rational> divide_by_x_minus_1(const std::vector<Rational>& c, bool& exact_division) {
    std::vector<Rational> q(c.size() - 1);
    Rational carry = 0;
    for (std::size_t i = 0; i + 1 < c.size(); ++i) {
        carry = carry + c[i];
        q[i] = carry;
    }
    exact_division = (carry + c.back()) == 0;
    return q;
}

Int square_free_split(Int d, Int& square) {
    // d = square^2 * rest with rest squarefree (trial division; discriminants
    // here are tiny).
    square = 1;
    for (Int f = 2; f * f <= d; ++f) {
        while (d % (f * f) == 0) {
            d /= f * f;
            square *= f;
        }
    }
    return d;
}

void solve_deflated_exact(const std::vector<Rational>& c, std::vector<Root>& out) {
    if (c.size() == 1) return;
    if (c.size() == 2) {
        Root r;
        r.exact_rational = -c[1] / c[0];
        r.value = r.exact_rational->convert_to<double>();
        out.push_back(r);
        return;
    }
    // quadratic a x^2 + b x + e
    const Rational &a = c[0], &b = c[1], &e = c[2];
    const Rational disc = b * b - 4 * a * e;
    if (disc < 0) return;
    if (disc == 0) {
        Root r;
        r.exact_rational = -b / (2 * a);
        r.value = r.exact_rational->convert_to<double>();
        r.mult = 2;
        out.push_back(r);
        return;
    }
    // sqrt(disc) = (sn/sd) sqrt(d) with d squarefree
    Int sq_n, sq_d;
    const Int dn = square_free_split(boost::multiprecision::numerator(disc), sq_n);
    const Int dd = square_free_split(boost::multiprecision::denominator(disc), sq_d);
    // sqrt(dn/dd) = sqrt(dn*dd)/dd; dn*dd squarefree because both factors are
    const Int d = dn * dd;
    const Rational scale = Rational(sq_n, sq_d * dd);
    if (d == 1) {
        for (int sgn : {-1, 1}) {
            Root r;
            r.exact_rational = (-b + sgn * scale) / (2 * a);
            r.value = r.exact_rational->convert_to<double>();
            out.push_back(r);
        }
        return;
    }
    for (int sgn : {-1, 1}) {
        Root r;
        QuadraticRadical rad;
        rad.p = -b / (2 * a);
        rad.q = sgn * scale / (2 * a);
        rad.d = d;
        r.exact_radical = rad;
        r.value = rad.to_double();
        out.push_back(r);
    }
}

double polish_newton(const std::vector<double>& c, const std::vector<double>& dc, double x) {
    for (int it = 0; it < 60; ++it) {
        const double f = eval_double(c, x);
        const double df = eval_double(dc, x);
        if (df == 0) break;
        const double step = f / df;
        x -= step;
        if (std::abs(step) < 1e-15 * std::max(1.0, std::abs(x))) break;
    }
    return x;
}

double bisect(const std::vector<double>& c, double lo, double hi) {
    double flo = eval_double(c, lo);
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        const double fm = eval_double(c, mid);
        if (fm == 0) return mid;
        if ((flo < 0) == (fm < 0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
        if (hi - lo < 1e-14 * std::max(1.0, std::abs(lo))) break;
    }
    return 0.5 * (lo + hi);
}

// Real roots by recursive critical-point bracketing: the roots of the
// derivative split the line into monotone pieces.
std::vector<double> real_roots_numeric(const std::vector<double>& c) {
    const std::size_t deg = c.size() - 1;
    if (deg == 0) return {};
    if (deg == 1) return {-c[1] / c[0]};
    std::vector<double> dc(deg);
    for (std::size_t i = 0; i < deg; ++i) dc[i] = c[i] * static_cast<double>(deg - i);
    std::vector<double> crit = real_roots_numeric(dc);
    std::sort(crit.begin(), crit.end());
    double bound = 0;
    for (std::size_t i = 1; i < c.size(); ++i) bound = std::max(bound, std::abs(c[i] / c[0]));
    bound += 1;
    std::vector<double> pts{-bound};
    for (const double x : crit)
        if (x > -bound && x < bound) pts.push_back(x);
    pts.push_back(bound);
    std::vector<double> out;
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
        const double fa = eval_double(c, pts[i]);
        const double fb = eval_double(c, pts[i + 1]);
        if (fa == 0) out.push_back(pts[i]);
        if ((fa < 0) != (fb < 0)) out.push_back(polish_newton(c, dc, bisect(c, pts[i], pts[i + 1])));
    }
    // critical points sitting on the axis are even-order roots
    for (const double x : crit) {
        const double fx = eval_double(c, x);
        if (std::abs(fx) <= 1e-10 * (1 + std::abs(eval_double(c, x + 1))))
            out.push_back(x);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end(),
                          [](double a, double b) { return std::abs(a - b) < 1e-9; }),
              out.end());
    return out;
}

}  // namespace

std::vector<Root> roots(const CurvaturePolynomial& p) {
    std::vector<Rational> c = p.normalized;
    int mult_at_one = 0;
    for (;;) {
        bool exact_division = false;
        if (c.size() < 2) break;
        auto q = divide_by_x_minus_1(c, exact_division);
        if (!exact_division) break;
        ++mult_at_one;
        c = std::move(q);
    }
    std::vector<Root> out;
    if (mult_at_one > 0) {
        Root r;
        r.exact_rational = Rational(1);
        r.value = 1.0;
        r.mult = mult_at_one;
        out.push_back(r);
    }
    if (c.size() <= 3) {
        solve_deflated_exact(c, out);
    } else {
        std::vector<double> cd(c.size());
        for (std::size_t i = 0; i < c.size(); ++i) cd[i] = c[i].convert_to<double>();
        for (const double x : real_roots_numeric(cd)) {
            Root r;
            r.value = x;
            out.push_back(r);
        }
    }
    std::sort(out.begin(), out.end(), [](const Root& a, const Root& b) { return a.value < b.value; });
    // merge duplicates (e.g. kappa = 1 found again numerically)
    std::vector<Root> merged;
    for (auto& r : out) {
        if (!merged.empty() && std::abs(merged.back().value - r.value) < 1e-9) {
            merged.back().mult += r.mult;
            if (!merged.back().is_exact() && r.is_exact()) {
                const int m = merged.back().mult;
                merged.back() = r;
                merged.back().mult = m;
            }
        } else {
            merged.push_back(r);
        }
    }
    return merged;
}

}  // namespace heatcone::curvpoly
