#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <vector>

namespace heatcone::exact {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Thrown when two scalars of different pi-grade are added or compared.
// Values of different grade are dimensionally distinct; summing them is a bug.
struct GradeMismatch : std::domain_error {
    explicit GradeMismatch(const std::string& what) : std::domain_error(what) {}
};

// Exact value of the form (p/q) * pi^(k/2) with p/q a reduced rational and
// k an integer ("half-power" of pi).  Zero is canonicalized to grade 0, so
// it is an additive identity at every grade.
class ExactScalar {
public:
    ExactScalar() = default;

    ExactScalar(Rational r, int pi_half = 0) : ratio_(std::move(r)), pi_half_(pi_half) {
        if (ratio_ == 0) pi_half_ = 0;
    }

    ExactScalar(long v) : ratio_(v) {}  // NOLINT: implicit integers are handy

    static ExactScalar from_ratio(long num, long den, int pi_half = 0) {
        if (den == 0) throw std::domain_error("zero denominator");
        return ExactScalar(Rational(num, den), pi_half);
    }

    const Rational& rational_part() const { return ratio_; }
    int pi_half_power() const { return pi_half_; }
    bool is_zero() const { return ratio_ == 0; }
    // True when the value carries no pi factor.
    bool is_rational() const { return pi_half_ == 0; }

    ExactScalar operator-() const { return ExactScalar(-ratio_, pi_half_); }

    ExactScalar& operator+=(const ExactScalar& o) {
        if (o.is_zero()) return *this;
        if (is_zero()) {
            *this = o;
            return *this;
        }
        if (pi_half_ != o.pi_half_)
            throw GradeMismatch("cannot add pi^{" + std::to_string(pi_half_) + "/2} to pi^{" +
                                std::to_string(o.pi_half_) + "/2}");
        ratio_ += o.ratio_;
        if (ratio_ == 0) pi_half_ = 0;
        return *this;
    }

    ExactScalar& operator-=(const ExactScalar& o) { return *this += -o; }

    ExactScalar& operator*=(const ExactScalar& o) {
        if (is_zero() || o.is_zero()) {
            *this = ExactScalar();
            return *this;
        }
        ratio_ *= o.ratio_;
        pi_half_ += o.pi_half_;
        return *this;
    }

    ExactScalar& operator/=(const ExactScalar& o) {
        if (o.is_zero()) throw std::domain_error("division by zero scalar");
        if (is_zero()) return *this;
        ratio_ /= o.ratio_;
        pi_half_ -= o.pi_half_;
        return *this;
    }

    friend ExactScalar operator+(ExactScalar a, const ExactScalar& b) { return a += b; }
    friend ExactScalar operator-(ExactScalar a, const ExactScalar& b) { return a -= b; }
    friend ExactScalar operator*(ExactScalar a, const ExactScalar& b) { return a *= b; }
    friend ExactScalar operator/(ExactScalar a, const ExactScalar& b) { return a /= b; }

    // Integer power; e may be negative for nonzero values.
    ExactScalar pow(int e) const;

    bool operator==(const ExactScalar& o) const {
        return ratio_ == o.ratio_ && pi_half_ == o.pi_half_;
    }
    bool operator!=(const ExactScalar& o) const { return !(*this == o); }

    double to_double() const;

    // Renders "p/q" for plain rationals and "p/q·π^{k/2}" otherwise.
    std::string to_text() const;

private:
    Rational ratio_{0};
    int pi_half_{0};
};

Int factorial(unsigned n);
Int binomial(unsigned n, unsigned k);

// b^e with e possibly negative (requires b != 0 for e < 0).
Rational pow_rational(const Rational& b, long e);

// Bernoulli number B_n in the convention with B_1 = -1/2.  Generated by the
// Akiyama--Tanigawa scheme (which yields B_1 = +1/2) with the sign of B_1
// fixed afterwards.  Memoized; safe for concurrent callers.
Rational bernoulli(unsigned n);

// Coefficients K_1..K_l of prod_{q=0}^{l-1} (v^2 - q^2) = sum_i K_i v^{2i}.
// result[i-1] holds K_i.  The constant term vanishes because of the q = 0
// factor, so the expansion starts at v^2.
std::vector<Rational> k_coefficients(int l);

// Gamma(l + 1/2) as an exact multiple of sqrt(pi), for any integer l.
ExactScalar gamma_half(int l);

}  // namespace heatcone::exact
