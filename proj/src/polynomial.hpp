#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "rational.hpp"

namespace vircat {

// Univariate polynomial over Q, dense representation with ascending powers.
class Polynomial {
public:
    Polynomial() = default;
    Polynomial(std::initializer_list<Rational> coeffs) : c_(coeffs) { normalize(); }
    explicit Polynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { normalize(); }
    static Polynomial constant(const Rational& r) { return Polynomial({r}); }
    static Polynomial x() { return Polynomial({Rational(0), Rational(1)}); }

    // degree of the zero polynomial is -1
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    Rational coeff(int k) const;
    const std::vector<Rational>& coeffs() const { return c_; }

    int lowest_degree() const;  // smallest k with nonzero coefficient, -1 when zero

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

    Polynomial scaled(const Rational& s) const;
    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    Rational eval(const Rational& x) const;
    Polynomial derivative() const;

    // p(a0 + a1*x)
    Polynomial compose_affine(const Rational& a0, const Rational& a1) const;

    // Euclidean division; denominator must be non-zero.
    static void divmod(const Polynomial& a, const Polynomial& b, Polynomial& q, Polynomial& r);
    static Polynomial gcd(Polynomial a, Polynomial b);  // monic gcd, or zero

    // "1 - 2*x + x^2" with ascending powers; "0" for the zero polynomial.
    std::string str(const std::string& var = "x") const;

private:
    void normalize();
    std::vector<Rational> c_;
};

// Quotient of polynomials, reduced: gcd cancelled, denominator monic.
class RationalFunction {
public:
    RationalFunction() : num_(), den_(Polynomial::constant(Rational(1))) {}
    RationalFunction(const Rational& r) : num_(Polynomial::constant(r)), den_(Polynomial::constant(Rational(1))) {}
    RationalFunction(Polynomial num) : num_(std::move(num)), den_(Polynomial::constant(Rational(1))) {}
    RationalFunction(Polynomial num, Polynomial den);

    const Polynomial& num() const { return num_; }
    const Polynomial& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.degree() == 0; }

    // Requires is_polynomial().
    Polynomial as_polynomial() const;

    RationalFunction operator-() const;
    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
    friend bool operator==(const RationalFunction& a, const RationalFunction& b);
    friend bool operator!=(const RationalFunction& a, const RationalFunction& b) { return !(a == b); }

    RationalFunction derivative() const;

    std::string str(const std::string& var = "x") const;

private:
    void reduce();
    Polynomial num_, den_;
};

}  // namespace vircat
