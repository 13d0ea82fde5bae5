#pragma once

#include "heatcone/exact.hpp"
#include "heatcone/zeta.hpp"

#include <cstdint>
#include <variant>
#include <vector>

namespace heatcone {

using exact::Rational;

// Cross-section geometries a cone can be built over.  The cone dimension is
// m = n + 1 where n is the cross-section dimension.

// Flat circle of radius sin_alpha in (0, 1]; alpha is the half-angle of the
// cone.  sin_alpha = 1 is the flat plane.
struct Circle {
    zeta::Beta sin_alpha;
};

// Round n-sphere of constant curvature kappa, odd n >= 3.  vol_ratio is the
// volume relative to the unit sphere; a genuine round sphere satisfies
// vol_ratio^2 = kappa^{-n}.
struct Sphere {
    int n = 3;
    Rational kappa{1};
    Rational vol_ratio{1};
};

// Unit-curvature spherical space form S^n / Gamma with volume ratio
// 1/|Gamma|, beyond the specifically supported quotients.
struct SpaceForm {
    int n = 3;
    Rational vol_ratio{1};
};

// Three-dimensional lens space, the quotient of the unit 3-sphere by a
// cyclic group of order k.
struct Lens {
    int k = 1;
};

// Real projective space of odd dimension n with the round unit metric.
struct RealProjective {
    int n = 5;
};

// Flat cubic torus of odd dimension n >= 3 and the given volume.
struct FlatTorus {
    int n = 3;
    Rational volume{1};
};

// A user-supplied spectrum (eigenvalue, multiplicity), ascending.
struct ExplicitSpectrum {
    struct Line {
        double lambda = 0;
        std::int64_t mult = 0;
    };
    std::vector<Line> lines;
};

using CrossSection =
    std::variant<Circle, Sphere, SpaceForm, Lens, RealProjective, FlatTorus, ExplicitSpectrum>;

// Cross-section dimension.
int dimension(const CrossSection& cs);

}  // namespace heatcone
