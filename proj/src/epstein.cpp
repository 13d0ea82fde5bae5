#include "heatcone/zeta.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <vector>

// Analytic continuation of the flat-torus spectral zeta function
//   E(s) = sum_{k in Z^n} (4 pi^2 |k|^2 + q^2)^{-s}.
// Splitting the Mellin integral Gamma(s) E(s) = int_0^inf t^{s-1} theta(t) dt
// at t = 1 and applying the modular transformation of the theta function on
// (0,1) gives
//   Gamma(s) E(s) = sum_j r_n(j) A_j^{-s} Gamma(s, A_j)
//     + (4pi)^{-n/2} [ sum_v (-q^2)^v / (v! (s - n/2 + v))
//                      + sum_{j>=1} r_n(j) int_1^inf u^{n/2-s-1}
//                                            e^{-q^2/u - j u/4} du ],
// with A_j = 4 pi^2 j + q^2 and r_n(j) the number of lattice points of norm
// squared j.  Every piece except the explicit pole sum is entire in s, which
// is what makes the residues readable from the prefactor.

namespace heatcone::zeta {

// Lattice point counts r_n(0..jmax) by iterated convolution with the
// one-dimensional counts (1 at 0, 2 at the positive squares).
std::vector<long long> lattice_counts(int n, int jmax) {
    std::vector<long long> cur(jmax + 1, 0);
    cur[0] = 1;
    for (int dim = 0; dim < n; ++dim) {
        std::vector<long long> next(jmax + 1, 0);
        for (int k = 0; k * k <= jmax; ++k) {
            const long long w = k == 0 ? 1 : 2;
            for (int j = k * k; j <= jmax; ++j) next[j] += w * cur[j - k * k];
        }
        cur = std::move(next);
    }
    return cur;
}

namespace {

// gamma(sigma, x) lower series for sigma in [1,2), x < 3.
double lower_gamma_series(double sigma, double x) {
    double term = std::pow(x, sigma) * std::exp(-x) / sigma;
    double acc = term;
    for (int k = 1; k < 200; ++k) {
        term *= x / (sigma + k);
        acc += term;
        if (std::abs(term) < 1e-18 * std::abs(acc)) break;
    }
    return acc;
}

// Gamma(sigma, x) by Lentz continued fraction for sigma in [1,2), x >= 3.
double upper_gamma_cf(double sigma, double x) {
    const double tiny = 1e-290;
    double b = x + 1 - sigma;
    double c = 1 / tiny;
    double d = 1 / b;
    double h = d;
    for (int i = 1; i < 400; ++i) {
        const double an = -i * (i - sigma);
        b += 2;
        d = an * d + b;
        if (std::abs(d) < tiny) d = tiny;
        c = b + an / c;
        if (std::abs(c) < tiny) c = tiny;
        d = 1 / d;
        const double delta = d * c;
        h *= delta;
        if (std::abs(delta - 1.0) < 1e-16) break;
    }
    return std::exp(-x + sigma * std::log(x)) * h;
}

double simpson_rec(const std::function<double(double)>& f, double a, double b, double fa, double fm,
                   double fb, double whole, double tol, int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const double flm = f(lm), frm = f(rm);
    const double left = (m - a) / 6 * (fa + 4 * flm + fm);
    const double right = (b - m) / 6 * (fm + 4 * frm + fb);
    if (depth <= 0 || std::abs(left + right - whole) < 15 * tol)
        return left + right + (left + right - whole) / 15;
    return simpson_rec(f, a, m, fa, flm, fm, left, tol / 2, depth - 1) +
           simpson_rec(f, m, b, fm, frm, fb, right, tol / 2, depth - 1);
}

double integrate(const std::function<double(double)>& f, double a, double b, double tol) {
    const double m = 0.5 * (a + b);
    const double fa = f(a), fm = f(m), fb = f(b);
    const double whole = (b - a) / 6 * (fa + 4 * fm + fb);
    return simpson_rec(f, a, b, fa, fm, fb, whole, tol, 24);
}

}  // namespace

double upper_gamma(double s, double x) {
    if (x <= 0) throw std::domain_error("upper_gamma needs x > 0");
    // Raise s into [1,2) and unwind Gamma(s,x) = (Gamma(s+1,x) - x^s e^{-x})/s.
    int steps = 0;
    double sigma = s;
    while (sigma < 1) {
        sigma += 1;
        ++steps;
    }
    while (sigma >= 2) {
        sigma -= 1;
        --steps;
    }
    double g = x < 3 ? std::tgamma(sigma) - lower_gamma_series(sigma, x) : upper_gamma_cf(sigma, x);
    if (steps <= 0) {
        // walk upward: Gamma(s+1,x) = s Gamma(s,x) + x^s e^{-x}
        for (int i = 0; i < -steps; ++i) {
            g = sigma * g + std::pow(x, sigma) * std::exp(-x);
            sigma += 1;
        }
        return g;
    }
    for (int i = 0; i < steps; ++i) {
        sigma -= 1;
        g = (g - std::pow(x, sigma) * std::exp(-x)) / sigma;
    }
    return g;
}

namespace {

struct EpsteinParts {
    double direct;    // sum_j r_n(j) A_j^{-s} Gamma(s, A_j)
    double pole_sum;  // sum_v (-q^2)^v / (v! (s - n/2 + v))
    double dual;      // sum_{j>=1} r_n(j) I_j(s)
};

EpsteinParts epstein_parts(int n, double q, double s, int jd_max) {
    const double q2 = q * q;
    EpsteinParts p{0, 0, 0};

    const auto counts_a = lattice_counts(n, 6);
    for (int j = 0; j <= 6; ++j) {
        if (counts_a[j] == 0) continue;
        const double A = 4 * M_PI * M_PI * j + q2;
        p.direct += static_cast<double>(counts_a[j]) * std::pow(A, -s) * upper_gamma(s, A);
    }

    double base = 1;  // (-q^2)^v / v!
    for (int v = 0; v <= 80; ++v) {
        const double denom = s - 0.5 * n + v;
        if (std::abs(denom) < 1e-9) throw PoleHit("epstein evaluation at a pole");
        p.pole_sum += base / denom;
        if (v > 2 * q2 + 8 && std::abs(base) < 1e-19) break;
        base *= -q2 / (v + 1);
    }

    const auto counts = lattice_counts(n, jd_max);
    const double pexp = 0.5 * n - s - 1;
    for (int j = 1; j <= jd_max; ++j) {
        if (counts[j] == 0) continue;
        const double c = 0.25 * j;
        const double scale = std::exp(-c);  // dominant decay of the j-th integral
        if (static_cast<double>(counts[j]) * scale < 1e-19 * (1 + std::abs(p.dual))) continue;
        auto f = [&](double u) { return std::pow(u, pexp) * std::exp(-q2 / u - c * u); };
        const double ustar = (pexp + std::sqrt(pexp * pexp + 4 * c * q2)) / (2 * c);
        const double upper = std::max(3.0 * std::max(1.0, ustar), 1.0 + 220.0 / j);
        p.dual += static_cast<double>(counts[j]) *
                  integrate(f, 1.0, upper, std::max(1e-13 * scale, 1e-250));
    }
    return p;
}

}  // namespace

double epstein_value(int n, double shift, double s) {
    if (n < 3 || n % 2 == 0) throw std::domain_error("epstein_value needs odd n >= 3");
    if (shift <= 0) throw std::domain_error("epstein_value needs positive shift");
    if (s <= 0.5 * n - 6) throw std::domain_error("s below the supported window");

    const EpsteinParts full = epstein_parts(n, shift, s, 260);
    const EpsteinParts half = epstein_parts(n, shift, s, 160);
    const double pref = std::pow(4 * M_PI, -0.5 * n);
    const double num_full = full.direct + pref * (full.pole_sum + full.dual);
    const double num_half = half.direct + pref * (half.pole_sum + half.dual);
    if (std::abs(num_full - num_half) > 1e-11 * std::max(1.0, std::abs(num_full)))
        throw std::runtime_error("theta-transform series did not converge");
    return num_full / std::tgamma(s);
}

double epstein_residue_prefactor(int n, double shift, int pole_j) {
    if (n < 3 || n % 2 == 0) throw std::domain_error("needs odd n >= 3");
    if (shift <= 0) throw std::domain_error("needs positive shift");
    const int j = pole_j < 0 ? (n + 1) / 2 : pole_j;
    // Validate the continuation numerically at an off-pole probe before
    // trusting its pole structure.
    (void)epstein_value(n, shift, 0.5 * n - j + 0.125);
    double fact = 1;
    for (int k = 2; k <= j; ++k) fact *= k;
    const double gamma_at = std::tgamma(0.5 * n - j);
    return std::pow(4 * M_PI, -0.5 * n) * std::pow(-shift * shift, j) / (fact * gamma_at);
}

double epstein_residue_published(int n, const Rational& s) {
    if (n < 3 || n % 2 == 0) throw std::domain_error("needs odd n >= 3");
    const Rational two_s_r = s * 2;
    if (boost::multiprecision::denominator(two_s_r) != 1)
        throw std::domain_error("not a pole of the continuation");
    const long two_s = boost::multiprecision::numerator(two_s_r).convert_to<long>();
    if (two_s % 2 == 0 || two_s > n) throw std::domain_error("not a pole of the continuation");

    if (two_s == -1) {
        double fact = 1;
        for (int k = 2; k <= (n + 1) / 2; ++k) fact *= k;
        const double mag = std::pow(n - 1.0, n + 1) /
                           (std::pow(2.0, 2 * n + 2) * std::pow(M_PI, n + 0.5) * fact);
        return ((n + 1) / 2) % 2 == 0 ? mag : -mag;
    }
    const double sd = two_s / 2.0;
    const long sign_exp = (n + two_s) / 2;
    const double sign = sign_exp % 2 == 0 ? 1.0 : -1.0;
    return sign * std::pow(M_PI, sd / 2) * std::pow((n - 1) / 2.0, n - 2 * sd) /
           (std::pow(2 * M_PI, n) * std::tgamma(sd) * std::tgamma(0.5 * n - sd + 1));
}

}  // namespace heatcone::zeta
