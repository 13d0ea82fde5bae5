#include "heatcone/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <future>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>
#include <variant>

#include "heatcone/exact.hpp"
#include "heatcone/fp.hpp"
#include "heatcone/zeta.hpp"

namespace heatcone::oracle {

namespace {

using exact::Int;
using exact::Rational;

// Neumaier-compensated accumulator; the reduction order is fixed by the
// caller, so results are reproducible run to run.
template <class Real>
struct Compensated {
    Real sum = 0, comp = 0;
    void add(Real x) {
        const Real t = sum + x;
        if (std::abs(sum) >= std::abs(x))
            comp += (sum - t) + x;
        else
            comp += (x - t) + sum;
        sum = t;
    }
    Real total() const { return sum + comp; }
};

std::vector<Rational> poly_mul(const std::vector<Rational>& a,
                               const std::vector<Rational>& b) {
    std::vector<Rational> out(a.size() + b.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    return out;
}

std::vector<double> poly_to_double(const std::vector<Rational>& p) {
    std::vector<double> out(p.size());
    for (std::size_t i = 0; i < p.size(); ++i)
        out[i] = p[i].convert_to<double>();
    return out;
}

double unit_sphere_volume(int n) {
    return 2.0 * std::pow(std::numbers::pi, 0.5 * (n + 1)) /
           std::tgamma(0.5 * (n + 1));
}

// Multiplicity of the k-th distinct sphere eigenvalue, exactly:
// (2k + n - 1) (k+1) ... (k+n-2) / (n-1)!.
std::int64_t sphere_mult(int n, long k) {
    Int num = 2 * k + n - 1;
    for (int t = 1; t <= n - 2; ++t) num *= k + t;
    const Int den = exact::factorial(n - 1);
    if (num % den != 0)
        throw std::logic_error("sphere multiplicity is not integral");
    return (num / den).convert_to<std::int64_t>();
}

// Same for projective space: the sphere multiplicity at even degree 2k.
std::int64_t projective_mult(int n, long k) {
    Int num = 4 * k + n - 1;
    for (int t = 1; t <= n - 2; ++t) num *= 2 * k + t;
    const Int den = exact::factorial(n - 1);
    if (num % den != 0)
        throw std::logic_error("projective multiplicity is not integral");
    return (num / den).convert_to<std::int64_t>();
}

// Multiplicity polynomial in k for the tail model, as doubles.
std::vector<double> sphere_mu_poly(int n, bool projective) {
    std::vector<Rational> p{Rational(projective ? n - 1 : n - 1),
                            Rational(projective ? 4 : 2)};
    for (int t = 1; t <= n - 2; ++t)
        p = poly_mul(p, {Rational(t), Rational(projective ? 2 : 1)});
    const Rational den(exact::factorial(n - 1));
    for (auto& c : p) c /= den;
    return poly_to_double(p);
}

constexpr std::size_t kBlock = 4096;

template <class Real>
Real trace_blocks(const std::vector<Entry>& entries, Real t) {
    // Smallest terms first: walk the entries from the largest eigenvalue
    // down, in fixed blocks.  Blocks are independent, so they may be
    // evaluated concurrently; the final reduction order never changes.
    const std::size_t m = entries.size();
    const std::size_t nblocks = (m + kBlock - 1) / kBlock;
    std::vector<Real> partial(nblocks);
    auto run_block = [&](std::size_t b) {
        Compensated<Real> acc;
        const std::size_t lo = b * kBlock;
        const std::size_t hi = std::min(m, lo + kBlock);
        for (std::size_t r = lo; r < hi; ++r) {
            const Entry& e = entries[m - 1 - r];
            acc.add(Real(e.mult) * std::exp(-t * Real(e.lambda)));
        }
        return acc.total();
    };
    if (m >= (std::size_t{1} << 16)) {
        std::vector<std::future<Real>> fut;
        fut.reserve(nblocks);
        for (std::size_t b = 0; b < nblocks; ++b)
            fut.push_back(std::async(std::launch::async, run_block, b));
        for (std::size_t b = 0; b < nblocks; ++b) partial[b] = fut[b].get();
    } else {
        for (std::size_t b = 0; b < nblocks; ++b) partial[b] = run_block(b);
    }
    Compensated<Real> acc;
    for (Real v : partial) acc.add(v);
    return acc.total();
}

}  // namespace

Spectrum spectrum(const CrossSection& cs, double lambda_max) {
    if (!(lambda_max > 0))
        throw std::invalid_argument("lambda_max must be positive");
    Spectrum sp;
    sp.lambda_max = lambda_max;

    if (const auto* c = std::get_if<Circle>(&cs)) {
        const double beta = c->sin_alpha.value();
        sp.n = 1;
        sp.volume = 2 * std::numbers::pi * beta;
        sp.entries.push_back({0.0, 1});
        long k = 1;
        for (; (k / beta) * (k / beta) <= lambda_max; ++k)
            sp.entries.push_back({(k / beta) * (k / beta), 2});
        sp.tail = TailModel{{2.0}, 1.0 / (beta * beta), 0.0, 0.0, k - 1};
        return sp;
    }
    if (const auto* s = std::get_if<Sphere>(&cs)) {
        const int n = s->n;
        // The listed volume ratio must be the one the curvature dictates,
        // otherwise the object has no spectrum to enumerate.
        if (s->vol_ratio * s->vol_ratio * exact::pow_rational(s->kappa, n) !=
            Rational(1))
            throw std::invalid_argument(
                "volume ratio inconsistent with the curvature; no such "
                "homogeneous sphere");
        const double kap = s->kappa.convert_to<double>();
        sp.n = n;
        sp.volume = s->vol_ratio.convert_to<double>() * unit_sphere_volume(n);
        long k = 0;
        for (; kap * k * (k + n - 1.0) <= lambda_max; ++k)
            sp.entries.push_back({kap * k * (k + n - 1.0), sphere_mult(n, k)});
        sp.tail = TailModel{sphere_mu_poly(n, false), kap, kap * (n - 1), 0.0,
                            k - 1};
        return sp;
    }
    if (const auto* p = std::get_if<RealProjective>(&cs)) {
        const int n = p->n;
        sp.n = n;
        sp.volume = 0.5 * unit_sphere_volume(n);
        long k = 0;
        for (; 2.0 * k * (2 * k + n - 1.0) <= lambda_max; ++k)
            sp.entries.push_back(
                {2.0 * k * (2 * k + n - 1.0), projective_mult(n, k)});
        sp.tail =
            TailModel{sphere_mu_poly(n, true), 4.0, 2.0 * (n - 1), 0.0, k - 1};
        return sp;
    }
    if (const auto* t = std::get_if<FlatTorus>(&cs)) {
        const int n = t->n;
        const double vol = t->volume.convert_to<double>();
        const double scale =
            4 * std::numbers::pi * std::numbers::pi / std::pow(vol, 2.0 / n);
        const double jmax_d = lambda_max / scale;
        if (jmax_d > 1e7)
            throw std::invalid_argument("torus enumeration cutoff too large");
        const int jmax = static_cast<int>(jmax_d);
        const auto counts = zeta::lattice_counts(n, jmax);
        sp.n = n;
        sp.volume = vol;
        for (int j = 0; j <= jmax; ++j)
            if (counts[j] != 0) sp.entries.push_back({scale * j, counts[j]});
        return sp;
    }
    if (const auto* e = std::get_if<ExplicitSpectrum>(&cs)) {
        sp.n = 0;
        sp.volume = std::numeric_limits<double>::quiet_NaN();
        double prev = -1;
        for (const auto& line : e->lines) {
            if (!(line.lambda >= 0) || line.mult <= 0 || line.lambda <= prev)
                throw std::invalid_argument(
                    "explicit spectrum must be ascending with positive "
                    "multiplicities");
            prev = line.lambda;
            if (line.lambda <= lambda_max)
                sp.entries.push_back({line.lambda, line.mult});
        }
        return sp;
    }
    throw std::invalid_argument(
        "eigenvalue enumeration is not implemented for this geometry");
}

double heat_trace_partial(const Spectrum& sp, double t) {
    if (!(t > 0)) throw std::invalid_argument("t must be positive");
    if (fp::extended_precision())
        return static_cast<double>(
            trace_blocks<long double>(sp.entries, static_cast<long double>(t)));
    return trace_blocks<double>(sp.entries, t);
}

double truncation_bound(const Spectrum& sp, double t) {
    if (!std::isfinite(sp.volume) || sp.n <= 0)
        throw std::invalid_argument(
            "truncation bound needs a geometry with known volume");
    // Weyl counting with a safety factor of two, integrated against
    // e^{-t lambda} from the cutoff upward.
    const double n2 = 0.5 * sp.n;
    const double pref =
        2.0 * sp.volume / (std::pow(4 * std::numbers::pi, n2) * std::tgamma(n2));
    return pref * std::pow(t, -n2) * zeta::upper_gamma(n2, t * sp.lambda_max);
}

double dirichlet_sum(const Spectrum& sp, double shift, double s) {
    const double q2 = shift * shift;
    Compensated<double> direct;
    // largest eigenvalue first, so the small terms accumulate first
    for (std::size_t r = sp.entries.size(); r-- > 0;) {
        const Entry& e = sp.entries[r];
        if (e.lambda == 0 && shift == 0) continue;
        direct.add(double(e.mult) * std::pow(e.lambda + q2, -s));
    }
    if (!sp.tail) {
        if (sp.entries.empty() ||
            sp.entries.back().lambda >= 0.999 * sp.lambda_max)
            throw std::runtime_error(
                "no closed tail model for this spectrum; tail error cannot "
                "be certified");
        // Spectrum is finite and fully enumerated; nothing was dropped.
        return direct.total();
    }

    const TailModel& tm = *sp.tail;
    const double c2 = tm.l2, c1 = tm.l1, c0 = tm.l0 + q2;
    if (!(c2 > 0)) throw std::logic_error("tail model must be quadratic");
    const int D = static_cast<int>(tm.mu.size()) - 1;
    if (!(2 * s - D > 1.01))
        throw std::runtime_error("s too small for the tail expansion");
    const double x0 = tm.k_max + 1.0;
    const double al = c1 / c2, be = c0 / c2;
    const double delta0 = std::abs(al) / x0 + std::abs(be) / (x0 * x0);
    if (delta0 > 0.25)
        throw std::runtime_error("enumeration cutoff too small for the tail");

    // lambda(k) + q^2 = c2 k^2 (1 + delta(k)); expand (1+delta)^{-s} in
    // inverse powers of k and resum each power with a Hurwitz zeta value.
    constexpr int R = 18;
    double binom_ms[R + 1];  // binom(-s, v)
    binom_ms[0] = 1;
    for (int v = 1; v <= R; ++v)
        binom_ms[v] = binom_ms[v - 1] * (-s - (v - 1)) / v;
    double e[R + 1] = {0};
    for (int r = 0; r <= R; ++r)
        for (int j = 0; 2 * j <= r; ++j)
            e[r] += binom_ms[r - j] *
                    exact::binomial(r - j, j).convert_to<double>() *
                    std::pow(al, r - 2 * j) * std::pow(be, j);

    const double pref = std::pow(c2, -s);
    Compensated<double> tail;
    double band_last = 0;
    for (int d = 0; d <= D; ++d) {
        if (tm.mu[d] == 0) continue;
        for (int r = 0; r <= R; ++r)
            tail.add(pref * tm.mu[d] * e[r] *
                     zeta::hurwitz_zeta_numeric(2 * s + r - d, x0));
        band_last += std::abs(pref * tm.mu[d] * e[R] *
                              zeta::hurwitz_zeta_numeric(2 * s + R - d, x0));
    }
    const double total = direct.total() + tail.total();
    const double err =
        band_last * delta0 / (1 - delta0) + 1e-16 * std::abs(direct.total());
    if (!(err <= 1e-9 * std::abs(total)))
        throw std::runtime_error(
            "tail error exceeds the certification threshold");
    return total;
}

std::vector<double> fit_heat_coeffs(const CrossSection& cs, int jmax,
                                    const std::vector<double>& t_grid,
                                    double lambda_max) {
    if (jmax < 0 || jmax > 6)
        throw std::invalid_argument("jmax out of range");
    if (t_grid.size() < static_cast<std::size_t>(jmax) + 4)
        throw std::invalid_argument("t grid too short for the requested order");
    for (std::size_t i = 0; i < t_grid.size(); ++i)
        if (!(t_grid[i] > 0) || (i > 0 && t_grid[i] <= t_grid[i - 1]))
            throw std::invalid_argument("t grid must be positive increasing");

    const Spectrum sp = spectrum(cs, lambda_max);
    if (sp.n <= 0)
        throw std::invalid_argument("coefficient fit needs a known dimension");

    std::vector<double> f(t_grid.size());
    for (std::size_t i = 0; i < t_grid.size(); ++i) {
        const double tr = heat_trace_partial(sp, t_grid[i]);
        if (i == 0) {
            const double bound = truncation_bound(sp, t_grid[0]);
            if (!(bound <= 1e-10 * tr))
                throw std::invalid_argument(
                    "lambda_max too small for the requested grid");
        }
        f[i] = std::pow(4 * std::numbers::pi * t_grid[i], 0.5 * sp.n) * tr;
    }

    // Peel coefficients one at a time: extrapolate the current remainder to
    // t = 0 with the four smallest grid points, subtract, divide by t.
    std::vector<double> out;
    std::vector<double> cur = f;
    for (int stage = 0; stage <= jmax; ++stage) {
        const int nodes = 4;
        double value = 0, cond = 0;
        for (int i = 0; i < nodes; ++i) {
            double w = 1;
            for (int j = 0; j < nodes; ++j)
                if (j != i) w *= -t_grid[j] / (t_grid[i] - t_grid[j]);
            value += w * cur[i];
            cond += std::abs(w);
        }
        if (cond > 1e5)
            throw std::runtime_error("extrapolation weights ill-conditioned");
        out.push_back(value);
        for (std::size_t i = 0; i < cur.size(); ++i)
            cur[i] = (cur[i] - value) / t_grid[i];
    }
    return out;
}

ResidueEstimate numeric_residue(const std::function<double(double)>& f,
                                double s0) {
    // Near a simple pole h f(s0 + h) is analytic in h with value Res at 0;
    // a full Neville tableau over halved offsets extrapolates it there.
    constexpr int kLevels = 9;
    double h[kLevels];
    double tab[kLevels][kLevels];
    double best = 0, best_err = std::numeric_limits<double>::infinity();
    for (int j = 0; j < kLevels; ++j) {
        h[j] = 0.1 / double(1 << j);
        const double v = f(s0 + h[j]);
        if (!std::isfinite(v))
            throw std::runtime_error("function not evaluable near the pole");
        tab[j][0] = h[j] * v;
        for (int k = 1; k <= j; ++k)
            tab[j][k] = (h[j - k] * tab[j][k - 1] - h[j] * tab[j - 1][k - 1]) /
                        (h[j - k] - h[j]);
        if (j > 0) {
            const double delta = std::abs(tab[j][j] - tab[j - 1][j - 1]);
            if (delta < best_err) {
                best_err = delta;
                best = tab[j][j];
            }
        }
    }
    if (!(best_err <= 1e-2 * (std::abs(best) + 1e-30) + 1e-10))
        throw std::runtime_error("residue extrapolation did not converge");
    return {best, best_err};
}

}  // namespace heatcone::oracle
