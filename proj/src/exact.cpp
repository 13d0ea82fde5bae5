#include "heatcone/exact.hpp"

#include <cmath>
#include <mutex>

namespace heatcone::exact {

ExactScalar ExactScalar::pow(int e) const {
    if (e == 0) return ExactScalar(Rational(1));
    if (is_zero()) {
        if (e < 0) throw std::domain_error("zero to a negative power");
        return ExactScalar();
    }
    return ExactScalar(pow_rational(ratio_, e), pi_half_ * e);
}

double ExactScalar::to_double() const {
    const double r = ratio_.convert_to<double>();
    if (pi_half_ == 0) return r;
    return r * std::pow(M_PI, pi_half_ / 2.0);
}

std::string ExactScalar::to_text() const {
    const std::string frac =
        boost::multiprecision::numerator(ratio_).str() + "/" + boost::multiprecision::denominator(ratio_).str();
    if (pi_half_ == 0) return frac;
    return frac + "·π^{" + std::to_string(pi_half_) + "/2}";
}

Int factorial(unsigned n) {
    Int r = 1;
    for (unsigned k = 2; k <= n; ++k) r *= k;
    return r;
}

Int binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    Int r = 1;
    for (unsigned j = 1; j <= k; ++j) {
        r *= n - k + j;
        r /= j;
    }
    return r;
}

Rational pow_rational(const Rational& b, long e) {
    if (e == 0) return Rational(1);
    if (b == 0) {
        if (e < 0) throw std::domain_error("zero to a negative power");
        return Rational(0);
    }
    Rational base = e > 0 ? b : Rational(1) / b;
    unsigned long k = static_cast<unsigned long>(e > 0 ? e : -e);
    Rational r = 1;
    while (k != 0) {
        if (k & 1u) r *= base;
        base *= base;
        k >>= 1u;
    }
    return r;
}

namespace {

// Extends the Akiyama--Tanigawa table up to index n inclusive.  The scheme
// produces B_1 = +1/2; the public accessor flips that one sign.
void extend_bernoulli(std::vector<Rational>& table, unsigned n) {
    std::vector<Rational> row;
    row.reserve(n + 1);
    table.clear();
    table.reserve(n + 1);
    for (unsigned i = 0; i <= n; ++i) {
        row.push_back(Rational(1, i + 1));
        for (unsigned j = i; j >= 1; --j) row[j - 1] = Rational(j) * (row[j - 1] - row[j]);
        table.push_back(row[0]);
    }
}

}  // namespace

Rational bernoulli(unsigned n) {
    static std::mutex mu;
    static std::vector<Rational> table;
    std::lock_guard<std::mutex> lock(mu);
    if (table.size() <= n) extend_bernoulli(table, n + 16);
    if (n == 1) return Rational(-1, 2);
    return table[n];
}

std::vector<Rational> k_coefficients(int l) {
    if (l < 1) throw std::domain_error("k_coefficients requires l >= 1");
    // Polynomial in x = v^2; poly[i] is the x^i coefficient.
    std::vector<Int> poly{1};
    for (int q = 0; q < l; ++q) {
        std::vector<Int> next(poly.size() + 1, Int(0));
        const Int q2 = Int(q) * q;
        for (std::size_t i = 0; i < poly.size(); ++i) {
            next[i + 1] += poly[i];
            next[i] -= q2 * poly[i];
        }
        poly = std::move(next);
    }
    std::vector<Rational> k;
    k.reserve(l);
    for (int i = 1; i <= l; ++i) k.push_back(Rational(poly[i]));
    return k;
}

ExactScalar gamma_half(int l) {
    if (l >= 0) {
        const unsigned u = static_cast<unsigned>(l);
        Rational r(factorial(2 * u), (Int(1) << (2 * u)) * factorial(u));
        return ExactScalar(r, 1);
    }
    // Downward recursion in closed form: Gamma(1/2 - p) = (-4)^p p! / (2p)! * sqrt(pi).
    const unsigned p = static_cast<unsigned>(-l);
    Rational r((Int(1) << (2 * p)) * factorial(p), factorial(2 * p));
    if (p % 2 == 1) r = -r;
    return ExactScalar(r, 1);
}

}  // namespace heatcone::exact
