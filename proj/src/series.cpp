#include "series.hpp"

#include <algorithm>

namespace vircat {

PuiseuxSeries::PuiseuxSeries(Rational leading_exponent, std::vector<GaussianRational> coeffs)
    : e0_(std::move(leading_exponent)), a_(std::move(coeffs)) {
    if (a_.empty())
        a_.resize(1);
}

PuiseuxSeries PuiseuxSeries::zero(const Rational& e0, int order) {
    return PuiseuxSeries(e0, std::vector<GaussianRational>(order + 1));
}

PuiseuxSeries PuiseuxSeries::one(int order) {
    std::vector<GaussianRational> c(order + 1);
    c[0] = GaussianRational(1);
    return PuiseuxSeries(Rational(0), std::move(c));
}

const GaussianRational& PuiseuxSeries::coeff(int n) const {
    static const GaussianRational zero_coeff{};
    if (n < 0 || n > order())
        return zero_coeff;
    return a_[n];
}

GaussianRational PuiseuxSeries::coeff_at(const Rational& e) const {
    if (e >= valid_bound())
        throw DomainError("coefficient at x^" + e.str() + " is beyond the valid truncation window");
    Rational delta = e - e0_;
    if (delta.is_negative() || !delta.is_integer())
        return GaussianRational(0);
    return coeff(static_cast<int>(delta.to_long()));
}

bool PuiseuxSeries::window_is_zero() const {
    return std::all_of(a_.begin(), a_.end(), [](const GaussianRational& c) { return c.is_zero(); });
}

PuiseuxSeries PuiseuxSeries::truncated(int order) const {
    if (order >= this->order())
        return *this;
    if (order < 0)
        throw DomainError("negative truncation order");
    return PuiseuxSeries(e0_, std::vector<GaussianRational>(a_.begin(), a_.begin() + order + 1));
}

PuiseuxSeries PuiseuxSeries::shifted(const Rational& delta) const {
    return PuiseuxSeries(e0_ + delta, a_);
}

PuiseuxSeries PuiseuxSeries::scaled(const GaussianRational& s) const {
    PuiseuxSeries r = *this;
    for (auto& c : r.a_)
        c *= s;
    return r;
}

PuiseuxSeries PuiseuxSeries::derivative() const {
    PuiseuxSeries r = *this;
    for (int n = 0; n <= order(); ++n)
        r.a_[n] *= GaussianRational(e0_ + Rational(n));
    r.e0_ = e0_ - Rational(1);
    return r;
}

PuiseuxSeries operator+(const PuiseuxSeries& a, const PuiseuxSeries& b) {
    Rational delta = b.e0_ - a.e0_;
    if (!delta.is_integer()) {
        // Exponent lattices differ; the sum is representable only when one of
        // the windows carries no terms.
        auto capped = [](const PuiseuxSeries& keep, const Rational& bound) {
            Rational len = bound - keep.e0_;
            long ord = len.is_integer() ? len.to_long() - 1 : len.floor_long();
            ord = std::max(0L, std::min<long>(ord, keep.order()));
            return keep.truncated(static_cast<int>(ord));
        };
        Rational bound = std::min(a.valid_bound(), b.valid_bound());
        if (a.window_is_zero())
            return capped(b, bound);
        if (b.window_is_zero())
            return capped(a, bound);
        throw DomainError("cannot add series with incompatible exponent lattices");
    }
    Rational e0 = std::min(a.e0_, b.e0_);
    Rational bound = std::min(a.valid_bound(), b.valid_bound());
    long n = (bound - e0).to_long();  // integer by construction
    if (n < 1)
        n = 1;
    std::vector<GaussianRational> c(n);
    long off_a = (a.e0_ - e0).to_long();
    long off_b = (b.e0_ - e0).to_long();
    for (long k = 0; k < n; ++k) {
        GaussianRational v(0);
        if (k - off_a >= 0 && k - off_a <= a.order())
            v += a.a_[k - off_a];
        if (k - off_b >= 0 && k - off_b <= b.order())
            v += b.a_[k - off_b];
        c[k] = v;
    }
    return PuiseuxSeries(e0, std::move(c));
}

PuiseuxSeries operator-(const PuiseuxSeries& a, const PuiseuxSeries& b) {
    return a + b.scaled(GaussianRational(-1));
}

PuiseuxSeries operator*(const PuiseuxSeries& a, const PuiseuxSeries& b) {
    int ord = std::min(a.order(), b.order());
    std::vector<GaussianRational> c(ord + 1);
    for (int n = 0; n <= ord; ++n) {
        GaussianRational v(0);
        for (int k = 0; k <= n; ++k)
            v += a.a_[k] * b.a_[n - k];
        c[n] = v;
    }
    return PuiseuxSeries(a.e0_ + b.e0_, std::move(c));
}

PuiseuxSeries PuiseuxSeries::mul_poly(const Polynomial& p) const {
    if (p.is_zero())
        return PuiseuxSeries::zero(e0_, order());
    int d = p.lowest_degree();
    std::vector<GaussianRational> c(order() + 1);
    for (int n = 0; n <= order(); ++n) {
        GaussianRational v(0);
        for (int k = 0; k <= n && d + k <= p.degree(); ++k)
            v += GaussianRational(p.coeff(d + k)) * a_[n - k];
        c[n] = v;
    }
    return PuiseuxSeries(e0_ + Rational(d), std::move(c));
}

bool operator==(const PuiseuxSeries& a, const PuiseuxSeries& b) {
    Rational bound = std::min(a.valid_bound(), b.valid_bound());
    Rational delta = b.e0_ - a.e0_;
    if (!delta.is_integer()) {
        auto zero_below = [&bound](const PuiseuxSeries& s) {
            for (int n = 0; n <= s.order(); ++n)
                if (s.e0_ + Rational(n) < bound && !s.a_[n].is_zero())
                    return false;
            return true;
        };
        return zero_below(a) && zero_below(b);
    }
    Rational e0 = std::min(a.e0_, b.e0_);
    for (Rational e = e0; e < bound; e += Rational(1)) {
        long na = (e - a.e0_).to_long();
        long nb = (e - b.e0_).to_long();
        GaussianRational ca = (na >= 0 && na <= a.order()) ? a.a_[na] : GaussianRational(0);
        GaussianRational cb = (nb >= 0 && nb <= b.order()) ? b.a_[nb] : GaussianRational(0);
        if (ca != cb)
            return false;
    }
    return true;
}

std::string PuiseuxSeries::str() const {
    std::string out;
    bool first = true;
    for (int n = 0; n <= order(); ++n) {
        if (a_[n].is_zero())
            continue;
        Rational e = e0_ + Rational(n);
        std::string term = "(" + a_[n].str() + ")";
        if (!e.is_zero()) {
            term += "*x^";
            term += e.is_integer() ? e.str() : "(" + e.str() + ")";
        }
        out += first ? term : " + " + term;
        first = false;
    }
    if (first)
        out = "0";
    out += " + O(x^";
    Rational vb = valid_bound();
    out += vb.is_integer() ? vb.str() : "(" + vb.str() + ")";
    out += ")";
    return out;
}

PuiseuxSeries binomial_series(const Rational& alpha, int order) {
    if (order < 0)
        throw DomainError("negative series order");
    std::vector<GaussianRational> c(order + 1);
    for (int n = 0; n <= order; ++n) {
        Rational v = binomial(alpha, n);
        if (n % 2 == 1)
            v = -v;
        c[n] = GaussianRational(v);
    }
    return PuiseuxSeries(Rational(0), std::move(c));
}

std::vector<long> partition_numbers(int order) {
    std::vector<long> p(order + 1, 0);
    p[0] = 1;
    for (int part = 1; part <= order; ++part)
        for (int n = part; n <= order; ++n)
            p[n] += p[n - part];
    return p;
}

}  // namespace vircat
