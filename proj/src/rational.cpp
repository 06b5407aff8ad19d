#include "rational.hpp"

#include <cctype>

namespace vircat {

Rational::Rational(long num, long den) {
    if (den == 0)
        throw DomainError("rational with zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational Rational::parse(const std::string& s) {
    auto valid_int = [](const std::string& t) {
        if (t.empty())
            return false;
        std::size_t k = (t[0] == '-') ? 1 : 0;
        if (k == t.size())
            return false;
        for (; k < t.size(); ++k)
            if (!std::isdigit(static_cast<unsigned char>(t[k])))
                return false;
        return true;
    };

    std::string num = s, den = "1";
    if (auto pos = s.find('/'); pos != std::string::npos) {
        num = s.substr(0, pos);
        den = s.substr(pos + 1);
    }
    if (!valid_int(num) || !valid_int(den))
        throw ParseError("malformed rational: \"" + s + "\"");
    mpz_class n(num), d(den);
    if (d == 0)
        throw ParseError("malformed rational (zero denominator): \"" + s + "\"");
    Rational r;
    r.v_ = mpq_class(n, d);
    r.v_.canonicalize();
    return r;
}

std::string Rational::str() const {
    return v_.get_str();
}

long Rational::to_long() const {
    if (!is_integer())
        throw DomainError("rational " + str() + " is not an integer");
    mpz_class n = v_.get_num();
    if (!n.fits_slong_p())
        throw DomainError("integer out of range: " + str());
    return n.get_si();
}

long Rational::floor_long() const {
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), v_.get_num().get_mpz_t(), v_.get_den().get_mpz_t());
    if (!q.fits_slong_p())
        throw DomainError("integer out of range: " + str());
    return q.get_si();
}

Rational Rational::operator-() const {
    Rational r;
    r.v_ = -v_;
    return r;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero())
        throw DomainError("division by zero");
    v_ /= o.v_;
    return *this;
}

Rational Rational::inverse() const {
    if (is_zero())
        throw DomainError("inverse of zero");
    Rational r(1);
    return r /= *this;
}

Rational Rational::pow(long e) const {
    if (e < 0)
        return inverse().pow(-e);
    Rational base = *this, acc(1);
    while (e > 0) {
        if (e & 1)
            acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

bool rational_sqrt(const Rational& x, Rational& root) {
    if (x.is_negative())
        return false;
    mpz_class num(x.numerator_str()), den(x.denominator_str());
    if (mpz_perfect_square_p(num.get_mpz_t()) == 0 || mpz_perfect_square_p(den.get_mpz_t()) == 0)
        return false;
    mpz_class sn, sd;
    mpz_sqrt(sn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(sd.get_mpz_t(), den.get_mpz_t());
    root = Rational::parse(sn.get_str() + "/" + sd.get_str());
    return true;
}

Rational binomial(const Rational& alpha, long k) {
    if (k < 0)
        return Rational(0);
    Rational acc(1);
    for (long j = 0; j < k; ++j)
        acc *= (alpha - Rational(j)) / Rational(j + 1);
    return acc;
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
    re += o.re;
    im += o.im;
    return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
    re -= o.re;
    im -= o.im;
    return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
    Rational r = re * o.re - im * o.im;
    Rational i = re * o.im + im * o.re;
    re = r;
    im = i;
    return *this;
}

GaussianRational GaussianRational::inverse() const {
    Rational n = norm();
    if (n.is_zero())
        throw DomainError("inverse of zero");
    return {re / n, -im / n};
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
    return *this *= o.inverse();
}

std::string GaussianRational::str() const {
    auto imag_part = [](const Rational& c) -> std::string {
        if (c == Rational(1))
            return "i";
        if (c == Rational(-1))
            return "-i";
        return c.str() + "*i";
    };
    if (im.is_zero())
        return re.str();
    if (re.is_zero())
        return imag_part(im);
    if (im.is_negative())
        return re.str() + " - " + imag_part(-im).substr(0, std::string::npos);
    return re.str() + " + " + imag_part(im);
}

}  // namespace vircat
