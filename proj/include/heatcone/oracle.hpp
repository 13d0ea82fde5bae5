#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "heatcone/cross_section.hpp"

// Brute-force spectral side: enumerate eigenvalues with multiplicities, sum
// heat traces and Dirichlet series directly, and recover asymptotic data by
// extrapolation.  Everything here is deliberately independent of the exact
// pipeline so the two can be played against each other in tests.

namespace heatcone::oracle {

struct Entry {
    double lambda;
    std::int64_t mult;
};

// Closed-form description of the spectrum beyond the enumeration cutoff:
// for index k > k_max the eigenvalue is l2 k^2 + l1 k + l0 and the
// multiplicity is the polynomial mu(k).  Families without a polynomial
// spectrum (torus, explicit lists) carry no tail model.
struct TailModel {
    std::vector<double> mu;  // ascending powers of k
    double l2 = 0, l1 = 0, l0 = 0;
    long k_max = 0;
};

struct Spectrum {
    int n = 0;
    double volume = 0;      // NaN when the geometry does not determine it
    double lambda_max = 0;  // enumeration cutoff actually applied
    std::vector<Entry> entries;
    std::optional<TailModel> tail;
};

// Eigenvalues of the Laplacian on the cross-section up to lambda_max.
// Supported families: circle, round sphere (the volume ratio must match the
// curvature), real projective space, flat torus, explicit lists.
Spectrum spectrum(const CrossSection& cs, double lambda_max);

// sum mult * exp(-t lambda) over the enumerated entries, summed smallest
// terms first in fixed blocks with compensated accumulation.
double heat_trace_partial(const Spectrum& sp, double t);

// Rigorous bound on the dropped tail of the heat trace: Weyl counting with a
// doubled constant turned into an incomplete-gamma integral.
double truncation_bound(const Spectrum& sp, double t);

// sum mult * (lambda + shift^2)^{-s} over the whole spectrum: enumerated
// entries plus an asymptotic tail resummed through Hurwitz zeta values.
// Entries with lambda = 0 are dropped when shift = 0.  Throws when the tail
// error cannot be certified below 1e-9 relative.
double dirichlet_sum(const Spectrum& sp, double shift, double s);

// Leading heat-trace coefficients a_0..a_jmax from partial sums on a t-grid:
// peel one power of t at a time, extrapolating each stage to t = 0.
std::vector<double> fit_heat_coeffs(const CrossSection& cs, int jmax,
                                    const std::vector<double>& t_grid,
                                    double lambda_max);

struct ResidueEstimate {
    double value = 0;
    double error = 0;
};

// Residue of f at s0 by Richardson extrapolation of h * f(s0 + h) to h = 0.
ResidueEstimate numeric_residue(const std::function<double(double)>& f,
                                double s0);

}  // namespace heatcone::oracle
