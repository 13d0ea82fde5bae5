#pragma once

#include "heatcone/exact.hpp"

#include <vector>

namespace heatcone::heat {

using exact::ExactScalar;
using exact::Rational;

// Heat-trace expansion coefficients a_0..a_jmax of a closed n-manifold,
// tr e^{-t Laplacian} ~ (4 pi t)^{-n/2} sum_j a_j t^j.  Every nonzero entry
// of one list carries the same pi-grade (checked on construction).
struct CoeffList {
    int n = 0;
    std::vector<ExactScalar> values;

    CoeffList(int dim, std::vector<ExactScalar> vals);
};

// a_j of the unit round n-sphere, odd n >= 3, assembled from the
// half-integer Gamma values and the K-coefficients of the multiplicity
// polynomial.  Grade is always pi^{(n+1)/2}.
ExactScalar sphere_coeff(int n, int j);

// Independent closed forms for n in {3,5,7}:
//   n=3: a_j = 2 pi^2 / j!
//   n=5: a_j = 2*4^{j-1} (6-j) pi^3 / (3 j!)
//   n=7: a_j = 3^{2j-6} (16 j^2 - 286 j + 1215) pi^4 / (5 j!)
ExactScalar sphere_coeff_closed(int n, int j);

// Coefficient of the rescaled geometry: curvature kappa, volume ratio r
// relative to the unit sphere gives a_j = r * kappa^j * a_j(unit).
// kappa may be negative; that case only serves polynomial evaluation.
ExactScalar scaled_coeff(int n, int j, const Rational& kappa, const Rational& vol_ratio);

CoeffList sphere_list(int n, int jmax);
CoeffList scaled_list(int n, int jmax, const Rational& kappa, const Rational& vol_ratio);

// Flat circle of circumference 2 pi sin_alpha: a_0 is the length, all
// higher coefficients vanish.
CoeffList circle_list(const Rational& sin_alpha, int jmax);

// Curvature data of a closed 3-manifold: scalar curvature, |Ric|^2 and
// |Riem|^2 (all pointwise constants), and the volume.
struct CurvatureData3 {
    double scal = 0;
    double ric_sq = 0;
    double riem_sq = 0;
    double volume = 0;

    static CurvatureData3 constant_curvature(double kappa, double volume) {
        return {6 * kappa, 12 * kappa * kappa, 12 * kappa * kappa, volume};
    }
};

// Log coefficient of a 4-dimensional cone over the given 3-manifold,
// evaluated from curvature integrals:
//   c = (1/(32 pi^2)) * (-A2 + A1 - A0/2)
// with A0 = V, A1 = V*scal/6, A2 = (V/360)(5 scal^2 - 2|Ric|^2 + 2|Riem|^2).
double geometric_log_term_4d(const CurvatureData3& d);

}  // namespace heatcone::heat
