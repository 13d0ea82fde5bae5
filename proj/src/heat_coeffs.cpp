#include "heatcone/heat_coeffs.hpp"

#include <cmath>

namespace heatcone::heat {

using exact::factorial;
using exact::gamma_half;
using exact::Int;
using exact::k_coefficients;
using exact::pow_rational;

CoeffList::CoeffList(int dim, std::vector<ExactScalar> vals) : n(dim), values(std::move(vals)) {
    if (n < 1) throw std::domain_error("coefficient list needs n >= 1");
    int grade = 0;
    bool seen = false;
    for (const auto& v : values) {
        if (v.is_zero()) continue;
        if (!seen) {
            grade = v.pi_half_power();
            seen = true;
        } else if (v.pi_half_power() != grade) {
            throw exact::GradeMismatch("coefficient list mixes pi grades");
        }
    }
}

ExactScalar sphere_coeff(int n, int j) {
    if (n < 3 || n % 2 == 0) throw std::domain_error("sphere_coeff needs odd n >= 3");
    if (j < 0) throw std::domain_error("negative coefficient index");
    const int u = (n - 1) / 2;
    const auto K = k_coefficients(u);
    // (4 pi)^{n/2} / (n-1)!
    ExactScalar pref(Rational(Int(1) << n, factorial(static_cast<unsigned>(n - 1))), n);
    ExactScalar sum;
    for (int l = 1; l <= u; ++l) {
        const int d = j + l - u;  // index into the factorial; drop negative terms
        if (d < 0) continue;
        ExactScalar term(K[l - 1] * pow_rational(Rational(u), 2 * d) / Rational(factorial(static_cast<unsigned>(d))));
        sum += term * gamma_half(l);
    }
    return pref * sum;
}

ExactScalar sphere_coeff_closed(int n, int j) {
    if (j < 0) throw std::domain_error("negative coefficient index");
    const Rational jf(factorial(static_cast<unsigned>(j)));
    switch (n) {
        case 3:
            return ExactScalar(Rational(2) / jf, 4);
        case 5: {
            Rational r = Rational(2) * pow_rational(Rational(4), j - 1) * Rational(6 - j) / (Rational(3) * jf);
            return ExactScalar(r, 6);
        }
        case 7: {
            Rational r = pow_rational(Rational(3), 2 * j - 6) * Rational(16 * j * j - 286 * j + 1215) /
                         (Rational(5) * jf);
            return ExactScalar(r, 8);
        }
        default:
            throw std::domain_error("closed forms cover n in {3,5,7}");
    }
}

ExactScalar scaled_coeff(int n, int j, const Rational& kappa, const Rational& vol_ratio) {
    return ExactScalar(vol_ratio * pow_rational(kappa, j)) * sphere_coeff(n, j);
}

CoeffList sphere_list(int n, int jmax) {
    std::vector<ExactScalar> v;
    v.reserve(jmax + 1);
    for (int j = 0; j <= jmax; ++j) v.push_back(sphere_coeff(n, j));
    return CoeffList(n, std::move(v));
}

CoeffList scaled_list(int n, int jmax, const Rational& kappa, const Rational& vol_ratio) {
    std::vector<ExactScalar> v;
    v.reserve(jmax + 1);
    for (int j = 0; j <= jmax; ++j) v.push_back(scaled_coeff(n, j, kappa, vol_ratio));
    return CoeffList(n, std::move(v));
}

CoeffList circle_list(const Rational& sin_alpha, int jmax) {
    if (sin_alpha <= 0 || sin_alpha > 1) throw std::domain_error("sin_alpha must lie in (0, 1]");
    std::vector<ExactScalar> v;
    v.reserve(jmax + 1);
    v.emplace_back(Rational(2) * sin_alpha, 2);  // length 2 pi sin_alpha
    for (int j = 1; j <= jmax; ++j) v.emplace_back();
    return CoeffList(1, std::move(v));
}

double geometric_log_term_4d(const CurvatureData3& d) {
    const double a0 = d.volume;
    const double a1 = d.volume * d.scal / 6.0;
    const double a2 = d.volume / 360.0 * (5 * d.scal * d.scal - 2 * d.ric_sq + 2 * d.riem_sq);
    return (-a2 + a1 - 0.5 * a0) / (32.0 * M_PI * M_PI);
}

}  // namespace heatcone::heat
