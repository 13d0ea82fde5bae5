#pragma once

#include "heatcone/cross_section.hpp"
#include "heatcone/exact.hpp"
#include "heatcone/heat_coeffs.hpp"
#include "heatcone/zeta.hpp"

#include <optional>
#include <vector>

namespace heatcone::singular {

using exact::ExactScalar;
using exact::Rational;

enum class Provenance { exact, numeric, unavailable };

// A singular-expansion coefficient: exact scalar, float, or not computable.
// scale records the largest intermediate magnitude of a numeric evaluation,
// so that zero tests can be made relative to it.
struct TermValue {
    Provenance tag = Provenance::unavailable;
    ExactScalar exact_value;
    double value = 0;
    double scale = 1;

    static TermValue from_exact(ExactScalar v) {
        TermValue t;
        t.tag = Provenance::exact;
        t.value = v.to_double();
        t.exact_value = std::move(v);
        return t;
    }
    static TermValue from_numeric(double v, double scale) {
        TermValue t;
        t.tag = Provenance::numeric;
        t.value = v;
        t.scale = scale;
        return t;
    }
    static TermValue none() { return TermValue{}; }

    bool known() const { return tag != Provenance::unavailable; }
    // Zero test: exact values exactly, numeric values relative to scale.
    bool is_zero() const;
};

enum class Verdict { actual, needs_b, apparent_candidate };

// Heat-trace singular terms of the cone over a cross-section:
// tr e^{-t Laplacian} ~ (4 pi t)^{-m/2} sum_j a~_j t^j + b + c log t.
struct SingularTerms {
    TermValue c;
    TermValue b;
    int m = 0;
    Verdict verdict = Verdict::needs_b;
};

// Log coefficient from the cross-section heat coefficients,
//   c = (1/(2 (4 pi)^{m/2})) sum_{k=0}^{m/2} (-1)^{k+1} (m-2)^{2k}/(4^k k!) a_{m/2-k}
// for even m; zero for odd m.  Needs a_0..a_{m/2}.
ExactScalar log_term(const heat::CoeffList& a, int m);

// Whether the log coefficient of the (n+1)-cone over this list vanishes.
bool vanishing_criterion(const heat::CoeffList& a);

// Constant term b of the cone over the cross-section, where a route exists;
// UNAVAILABLE otherwise (flat tori, generic space forms, rescaled spheres,
// explicit spectra without a combo).
TermValue constant_term(const CrossSection& cs);

// Constant term from a shifted spectral zeta combo (shift (m-2)/2):
//   b = -1/2 Res0 z(-1/2) + (Gamma'(-1/2)/(4 sqrt(pi))) Res1 z(-1/2)
//       - 1/4 sum_{1<=j<=m/2} j^{-1} B_{2j} Res1 z(j-1/2),
// with the Bernoulli-sum residues taken in the zeta-argument normalization.
// The Res1 z(-1/2) correction is numeric; it is skipped exactly when that
// residue is exactly zero.
TermValue constant_from_combo(const zeta::Combo& combo, int m);

// Closed form of the constant term over real projective space, n = 4v + 1:
//   b = sum_{i=1}^{2v} (2^{2i+2} - 1) B_{2i+2} K_i^{(2v)} / (4 (i+1) (n-1)!).
Rational rpn_constant_closed(int n);

// Closed form over the 3-dimensional lens space of order k:
//   b = (k^2 + 11)(k^2 - 1) / (720 k).
Rational lens_constant(int k);

// Constant term of a surface with one cone point per entry,
//   b = (1/12) sum_i (1/sin_alpha_i - sin_alpha_i).
TermValue surface_constant(const std::vector<zeta::Beta>& angles);

// Published closed form of the torus log coefficient (half the published
// residue); kept for cross-checking against the direct route.
double torus_log_term(int n);

// Four-dimensional space-form display combining the cross-section zeta value
// at -1/2 with the volume:  b = -z/2 + vol/(960 pi^2).
ExactScalar b_4d_space_form(const ExactScalar& zeta_value, const ExactScalar& volume);

// ACTUAL when a singular term is provably nonzero, NEEDS_B when c vanishes
// and b is unavailable, APPARENT_CANDIDATE when both vanish.
Verdict classify(const SingularTerms& t);

// True when the cone points make the surface spectrally distinguishable
// from every smooth closed surface (some angle contributes b > 0).
bool surface_isospectral_gate(const std::vector<zeta::Beta>& angles);

// Full assembly: log term, constant term, verdict.  m must match the
// cross-section dimension plus one where the dimension is intrinsic.
// Explicit spectra require a combo describing their shifted zeta function.
SingularTerms singular_terms(const CrossSection& cs, int m,
                             const std::optional<zeta::Combo>& combo = std::nullopt);

}  // namespace heatcone::singular
