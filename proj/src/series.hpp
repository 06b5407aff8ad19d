#pragma once

#include <string>
#include <vector>

#include "polynomial.hpp"
#include "rational.hpp"

namespace vircat {

// Truncated Puiseux series x^{e0} * sum_{n=0}^{order} a_n x^n with a single
// rational exponent offset. Coefficients beyond the stored window are unknown,
// not zero; every operation tracks the valid window.
class PuiseuxSeries {
public:
    PuiseuxSeries() : e0_(0), a_(1) {}
    PuiseuxSeries(Rational leading_exponent, std::vector<GaussianRational> coeffs);

    static PuiseuxSeries zero(const Rational& e0, int order);
    static PuiseuxSeries one(int order);

    const Rational& leading_exponent() const { return e0_; }
    int order() const { return static_cast<int>(a_.size()) - 1; }
    const std::vector<GaussianRational>& coefficients() const { return a_; }

    // coefficient of x^{e0+n}
    const GaussianRational& coeff(int n) const;
    // coefficient of x^e for any rational e strictly below the valid bound;
    // exponents off the lattice or below e0 give zero
    GaussianRational coeff_at(const Rational& e) const;

    // first exponent with unknown coefficient
    Rational valid_bound() const { return e0_ + Rational(order() + 1); }

    bool window_is_zero() const;

    PuiseuxSeries truncated(int order) const;
    PuiseuxSeries shifted(const Rational& delta) const;  // multiply by x^delta
    PuiseuxSeries scaled(const GaussianRational& s) const;
    PuiseuxSeries derivative() const;

    friend PuiseuxSeries operator+(const PuiseuxSeries& a, const PuiseuxSeries& b);
    friend PuiseuxSeries operator-(const PuiseuxSeries& a, const PuiseuxSeries& b);
    friend PuiseuxSeries operator*(const PuiseuxSeries& a, const PuiseuxSeries& b);

    PuiseuxSeries mul_poly(const Polynomial& p) const;

    // Equality in the truncated sense: coefficients agree on the common valid
    // window after aligning exponent offsets.
    friend bool operator==(const PuiseuxSeries& a, const PuiseuxSeries& b);
    friend bool operator!=(const PuiseuxSeries& a, const PuiseuxSeries& b) { return !(a == b); }

    std::string str() const;

private:
    Rational e0_;
    std::vector<GaussianRational> a_;
};

// Expansion of (1-x)^alpha to the given truncation order.
PuiseuxSeries binomial_series(const Rational& alpha, int order);

// Partition numbers p(0..order).
std::vector<long> partition_numbers(int order);

}  // namespace vircat
