#include "heatcone/singular.hpp"

#include <cmath>
#include <numbers>

namespace heatcone::singular {

using exact::bernoulli;
using exact::factorial;
using exact::Int;
using exact::k_coefficients;
using exact::pow_rational;
using zeta::Combo;
using zeta::Convention;

namespace {

constexpr double kZeroTol = 1e-12;

// Gamma'(-1/2)/(4 sqrt(pi)) = -(2 - gamma_E - 2 ln 2)/2, from
// psi(-1/2) = 2 - gamma_E - 2 ln 2 and Gamma(-1/2) = -2 sqrt(pi).
const double kResidueCorrection =
    -(2.0 - std::numbers::egamma - 2.0 * std::numbers::ln2) / 2.0;

}  // namespace

bool TermValue::is_zero() const {
    if (tag == Provenance::exact) return exact_value.is_zero();
    if (tag == Provenance::numeric) return std::abs(value) <= kZeroTol * std::max(1.0, scale);
    throw std::logic_error("zero test on an unavailable value");
}

ExactScalar log_term(const heat::CoeffList& a, int m) {
    if (m < 2) throw std::domain_error("cone dimension must be at least 2");
    if (m % 2 == 1) return ExactScalar();
    const int half = m / 2;
    if (a.values.size() < static_cast<std::size_t>(half) + 1)
        throw std::domain_error("coefficient list too short: need a_0..a_{m/2}");
    ExactScalar sum;
    for (int k = 0; k <= half; ++k) {
        Rational w = pow_rational(Rational(m - 2), 2 * k) /
                     (pow_rational(Rational(4), k) * Rational(factorial(static_cast<unsigned>(k))));
        if (k % 2 == 0) w = -w;  // (-1)^{k+1}
        sum += ExactScalar(w) * a.values[half - k];
    }
    const ExactScalar pref(Rational(1, Int(2) << m), -m);  // 1/(2 (4 pi)^{m/2}) = 1/(2^{m+1} pi^{m/2})
    return pref * sum;
}

bool vanishing_criterion(const heat::CoeffList& a) { return log_term(a, a.n + 1).is_zero(); }

TermValue constant_from_combo(const Combo& combo, int m) {
    if (m < 2 || m % 2 == 1) throw std::domain_error("combo route needs even m >= 2");
    // The correction term vanishes with the residue at -1/2; only then can
    // the result stay exact.
    bool have_exact_residue_at_half = false;
    ExactScalar res_half;
    try {
        res_half = zeta::combo_residue(combo, Rational(-1, 2), Convention::zeta_argument);
        have_exact_residue_at_half = true;
    } catch (const zeta::NonExactPoint&) {
    }

    try {
        if (!have_exact_residue_at_half || !res_half.is_zero()) throw zeta::NonExactPoint("correction term");
        ExactScalar b = ExactScalar(Rational(-1, 2)) * zeta::combo_value(combo, Rational(-1, 2));
        for (int j = 1; j <= m / 2; ++j) {
            const ExactScalar r =
                zeta::combo_residue(combo, Rational(2 * j - 1, 2), Convention::zeta_argument);
            b -= ExactScalar(bernoulli(2 * j) / Rational(4 * j)) * r;
        }
        return TermValue::from_exact(b);
    } catch (const zeta::NonExactPoint&) {
        // numeric mirror of the same formula
        double scale = 1;
        double b = -0.5 * zeta::combo_value_numeric(combo, -0.5);
        scale = std::max(scale, std::abs(b));
        for (int j = 1; j <= m / 2; ++j) {
            const double r =
                zeta::combo_residue_numeric(combo, j - 0.5, Convention::zeta_argument);
            const double term = bernoulli(2 * j).convert_to<double>() / (4.0 * j) * r;
            b -= term;
            scale = std::max(scale, std::abs(term));
        }
        const double r_half =
            zeta::combo_residue_numeric(combo, -0.5, Convention::zeta_argument);
        if (r_half != 0) {
            b += kResidueCorrection * r_half;
            scale = std::max(scale, std::abs(kResidueCorrection * r_half));
        }
        return TermValue::from_numeric(b, scale);
    }
}

Rational rpn_constant_closed(int n) {
    if (n < 5 || n % 4 != 1) throw std::domain_error("closed form needs n = 4v + 1");
    const int v = (n - 1) / 4;
    const auto K = k_coefficients(2 * v);
    const Rational fact(factorial(static_cast<unsigned>(n - 1)));
    Rational b = 0;
    for (int i = 1; i <= 2 * v; ++i)
        b += Rational((Int(1) << (2 * i + 2)) - 1) * bernoulli(2 * i + 2) * K[i - 1] /
             (Rational(4 * (i + 1)) * fact);
    return b;
}

Rational lens_constant(int k) {
    if (k < 1) throw std::domain_error("lens order must be positive");
    const Rational k2(static_cast<long>(k) * k);
    return (k2 + 11) * (k2 - 1) / Rational(720 * static_cast<long>(k));
}

TermValue surface_constant(const std::vector<zeta::Beta>& angles) {
    bool all_exact = true;
    for (const auto& a : angles) {
        if (a.value() <= 0 || a.value() > 1) throw std::domain_error("sin_alpha must lie in (0, 1]");
        all_exact = all_exact && a.exact;
    }
    if (all_exact) {
        Rational b = 0;
        for (const auto& a : angles) b += (Rational(1) / a.r - a.r) / 12;
        return TermValue::from_exact(ExactScalar(b));
    }
    double b = 0, scale = 1;
    for (const auto& a : angles) {
        const double s = a.value();
        b += (1.0 / s - s) / 12.0;
        scale = std::max(scale, 1.0 / s);
    }
    return TermValue::from_numeric(b, scale);
}

double torus_log_term(int n) { return 0.5 * zeta::epstein_residue_published(n, Rational(-1, 2)); }

ExactScalar b_4d_space_form(const ExactScalar& zeta_value, const ExactScalar& volume) {
    return ExactScalar(Rational(-1, 2)) * zeta_value +
           ExactScalar(Rational(1, 960), -4) * volume;
}

Verdict classify(const SingularTerms& t) {
    if (!t.c.known()) throw std::logic_error("classification needs the log term");
    if (!t.c.is_zero()) return Verdict::actual;
    if (!t.b.known()) return Verdict::needs_b;
    return t.b.is_zero() ? Verdict::apparent_candidate : Verdict::actual;
}

bool surface_isospectral_gate(const std::vector<zeta::Beta>& angles) {
    const TermValue b = surface_constant(angles);
    return !b.is_zero();
}

namespace {

TermValue log_term_of(const CrossSection& cs, int m) {
    if (const auto* c = std::get_if<Circle>(&cs)) {
        (void)c;
        return TermValue::from_exact(ExactScalar());  // flat circle: a_1 = 0
    }
    if (const auto* s = std::get_if<Sphere>(&cs))
        return TermValue::from_exact(
            log_term(heat::scaled_list(s->n, m / 2, s->kappa, s->vol_ratio), m));
    if (const auto* s = std::get_if<SpaceForm>(&cs))
        return TermValue::from_exact(
            log_term(heat::scaled_list(s->n, m / 2, Rational(1), s->vol_ratio), m));
    if (const auto* l = std::get_if<Lens>(&cs))
        return TermValue::from_exact(
            log_term(heat::scaled_list(3, m / 2, Rational(1), Rational(1, l->k)), m));
    if (const auto* r = std::get_if<RealProjective>(&cs))
        return TermValue::from_exact(
            log_term(heat::scaled_list(r->n, m / 2, Rational(1), Rational(1, 2)), m));
    if (const auto* t = std::get_if<FlatTorus>(&cs)) {
        std::vector<ExactScalar> vals(m / 2 + 1);
        vals[0] = ExactScalar(t->volume);
        return TermValue::from_exact(log_term(heat::CoeffList(t->n, std::move(vals)), m));
    }
    throw std::logic_error("log term route not covered");
}

TermValue constant_of(const CrossSection& cs, int m) {
    if (const auto* c = std::get_if<Circle>(&cs))
        return constant_from_combo(zeta::circle_combo(c->sin_alpha), m);
    if (const auto* s = std::get_if<Sphere>(&cs)) {
        if (s->kappa == 1 && s->vol_ratio == 1)
            return constant_from_combo(zeta::sphere_combo(s->n), m);
        return TermValue::none();  // no published route off the unit sphere
    }
    if (std::get_if<SpaceForm>(&cs)) return TermValue::none();
    if (const auto* l = std::get_if<Lens>(&cs))
        return TermValue::from_exact(ExactScalar(lens_constant(l->k)));
    if (const auto* r = std::get_if<RealProjective>(&cs)) {
        if (r->n == 3) return TermValue::from_exact(ExactScalar(lens_constant(2)));
        if (r->n % 4 == 1) return constant_from_combo(zeta::rpn_combo(r->n), m);
        return TermValue::none();
    }
    if (std::get_if<FlatTorus>(&cs)) return TermValue::none();
    throw std::logic_error("constant term route not covered");
}

}  // namespace

TermValue constant_term(const CrossSection& cs) {
    const int n = dimension(cs);
    return constant_of(cs, n + 1);
}

SingularTerms singular_terms(const CrossSection& cs, int m,
                             const std::optional<Combo>& combo) {
    SingularTerms out;
    out.m = m;
    if (const auto* e = std::get_if<ExplicitSpectrum>(&cs)) {
        (void)e;
        if (!combo)
            throw std::invalid_argument("explicit spectra need a combo for singular terms");
        try {
            out.c = TermValue::from_exact(
                ExactScalar(Rational(1, 2)) *
                zeta::combo_residue(*combo, Rational(-1, 2), Convention::s_variable));
        } catch (const zeta::NonExactPoint&) {
            out.c = TermValue::from_numeric(
                0.5 * zeta::combo_residue_numeric(*combo, -0.5, Convention::s_variable), 1.0);
        }
        out.b = constant_from_combo(*combo, m);
        out.verdict = classify(out);
        return out;
    }
    const int n = dimension(cs);
    if (m != n + 1)
        throw std::invalid_argument("cone dimension must be the cross-section dimension plus one");
    out.c = log_term_of(cs, m);
    out.b = constant_of(cs, m);
    out.verdict = classify(out);
    return out;
}

}  // namespace heatcone::singular

namespace heatcone {

int dimension(const CrossSection& cs) {
    if (std::get_if<Circle>(&cs)) return 1;
    if (const auto* s = std::get_if<Sphere>(&cs)) return s->n;
    if (const auto* s = std::get_if<SpaceForm>(&cs)) return s->n;
    if (std::get_if<Lens>(&cs)) return 3;
    if (const auto* r = std::get_if<RealProjective>(&cs)) return r->n;
    if (const auto* t = std::get_if<FlatTorus>(&cs)) return t->n;
    throw std::invalid_argument("explicit spectra carry no intrinsic dimension");
}

}  // namespace heatcone
