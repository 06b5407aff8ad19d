#include "polynomial.hpp"

#include <algorithm>

namespace vircat {

void Polynomial::normalize() {
    while (!c_.empty() && c_.back().is_zero())
        c_.pop_back();
}

Rational Polynomial::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(c_.size()))
        return Rational(0);
    return c_[k];
}

int Polynomial::lowest_degree() const {
    for (int k = 0; k < static_cast<int>(c_.size()); ++k)
        if (!c_[k].is_zero())
            return k;
    return -1;
}

Polynomial Polynomial::operator-() const {
    Polynomial r = *this;
    for (auto& c : r.c_)
        c = -c;
    return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    if (o.c_.size() > c_.size())
        c_.resize(o.c_.size());
    for (std::size_t k = 0; k < o.c_.size(); ++k)
        c_[k] += o.c_[k];
    normalize();
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    return *this += -o;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero())
        return Polynomial();
    std::vector<Rational> c(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j)
            c[i + j] += a.c_[i] * b.c_[j];
    return Polynomial(std::move(c));
}

Polynomial Polynomial::scaled(const Rational& s) const {
    Polynomial r = *this;
    for (auto& c : r.c_)
        c *= s;
    r.normalize();
    return r;
}

Rational Polynomial::eval(const Rational& x) const {
    Rational acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
        acc = acc * x + *it;
    return acc;
}

Polynomial Polynomial::derivative() const {
    if (c_.size() <= 1)
        return Polynomial();
    std::vector<Rational> d(c_.size() - 1);
    for (std::size_t k = 1; k < c_.size(); ++k)
        d[k - 1] = c_[k] * Rational(static_cast<long>(k));
    return Polynomial(std::move(d));
}

Polynomial Polynomial::compose_affine(const Rational& a0, const Rational& a1) const {
    Polynomial arg({a0, a1});
    Polynomial acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
        acc = acc * arg + Polynomial::constant(*it);
    return acc;
}

void Polynomial::divmod(const Polynomial& a, const Polynomial& b, Polynomial& q, Polynomial& r) {
    if (b.is_zero())
        throw DomainError("polynomial division by zero");
    q = Polynomial();
    r = a;
    Rational lead = b.c_.back();
    while (!r.is_zero() && r.degree() >= b.degree()) {
        int shift = r.degree() - b.degree();
        Rational factor = r.c_.back() / lead;
        std::vector<Rational> mono(shift + 1);
        mono[shift] = factor;
        Polynomial m(std::move(mono));
        q += m;
        r -= m * b;
    }
}

Polynomial Polynomial::gcd(Polynomial a, Polynomial b) {
    while (!b.is_zero()) {
        Polynomial q, r;
        divmod(a, b, q, r);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.is_zero())
        a = a.scaled(a.c_.back().inverse());
    return a;
}

std::string Polynomial::str(const std::string& var) const {
    if (is_zero())
        return "0";
    std::string out;
    bool first = true;
    for (int k = 0; k <= degree(); ++k) {
        const Rational& c = c_[k];
        if (c.is_zero())
            continue;
        Rational mag = c.abs();
        std::string term;
        if (k == 0)
            term = mag.str();
        else {
            if (mag != Rational(1))
                term = mag.str() + "*";
            term += var;
            if (k > 1)
                term += "^" + std::to_string(k);
        }
        if (first) {
            out = (c.is_negative() ? "-" : "") + term;
            first = false;
        } else {
            out += (c.is_negative() ? " - " : " + ") + term;
        }
    }
    return out;
}

RationalFunction::RationalFunction(Polynomial num, Polynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero())
        throw DomainError("rational function with zero denominator");
    reduce();
}

void RationalFunction::reduce() {
    if (num_.is_zero()) {
        den_ = Polynomial::constant(Rational(1));
        return;
    }
    Polynomial g = Polynomial::gcd(num_, den_);
    if (g.degree() > 0) {
        Polynomial q, r;
        Polynomial::divmod(num_, g, q, r);
        num_ = q;
        Polynomial::divmod(den_, g, q, r);
        den_ = q;
    }
    Rational lead = den_.coeffs().back();
    if (lead != Rational(1)) {
        Rational inv = lead.inverse();
        num_ = num_.scaled(inv);
        den_ = den_.scaled(inv);
    }
}

Polynomial RationalFunction::as_polynomial() const {
    if (!is_polynomial())
        throw DomainError("rational function is not polynomial: " + str());
    Rational d = den_.coeff(0);
    return num_.scaled(d.inverse());
}

RationalFunction RationalFunction::operator-() const {
    RationalFunction r = *this;
    r.num_ = -r.num_;
    return r;
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
    return a + (-b);
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
    if (b.is_zero())
        throw DomainError("division by zero rational function");
    return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
}

bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ * b.den_ == b.num_ * a.den_;
}

RationalFunction RationalFunction::derivative() const {
    return RationalFunction(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
}

std::string RationalFunction::str(const std::string& var) const {
    if (is_polynomial())
        return as_polynomial().str(var);
    return "(" + num_.str(var) + ") / (" + den_.str(var) + ")";
}

}  // namespace vircat
