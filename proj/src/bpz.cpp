#include "bpz.hpp"

#include <algorithm>

#include "correlator.hpp"
#include "virasoro.hpp"

namespace vircat {

std::array<Polynomial, 3> LinearODE::cleared() const {
    Polynomial den = Polynomial::constant(Rational(1));
    for (const auto& c : coeff)
        if (!c.is_polynomial()) {
            Polynomial g = Polynomial::gcd(den, c.den());
            Polynomial q, r;
            Polynomial::divmod(den, g, q, r);
            den = q * c.den();
        }
    std::array<Polynomial, 3> out;
    for (int j = 0; j < 3; ++j) {
        RationalFunction cleared_rf = coeff[j] * RationalFunction(den);
        out[j] = cleared_rf.as_polynomial();
    }
    // common polynomial content
    Polynomial g = Polynomial::gcd(Polynomial::gcd(out[0], out[1]), out[2]);
    if (g.degree() > 0)
        for (auto& p : out) {
            Polynomial q, r;
            Polynomial::divmod(p, g, q, r);
            p = q;
        }
    int low = out[2].lowest_degree();
    if (low >= 0) {
        Rational scale = out[2].coeff(low).inverse();
        for (auto& p : out)
            p = p.scaled(scale);
    }
    return out;
}

LinearODE derive_bpz(const Rational& c, const Rational& h_deg, const Rational& h_other) {
    if (c != Rational(25) || h_deg != Rational(-5, 4) || h_other != Rational(-5, 4))
        throw UnsupportedParameterError("out of implemented range: only c = 25 with all weights -5/4");
    // precondition: the degenerate field really carries L(-1)^2 + L(-2) at level 2
    std::vector<PBWVector> svs = singular_vector(verma(c, h_deg), 2);
    PBWVector expected = PBWVector::monomial(verma(c, h_deg), {1, 1}) +
                         PBWVector::monomial(verma(c, h_deg), {2});
    if (svs.size() != 1 || svs[0] != expected)
        throw UnsupportedParameterError("level-2 singular vector is not of the required shape");

    Polynomial x = Polynomial::x();
    Polynomial one = Polynomial::constant(Rational(1));
    Polynomial omx = one - x;
    LinearODE ode;
    ode.coeff[2] = RationalFunction(x * x * omx * omx);
    ode.coeff[1] = RationalFunction(-(x * omx * (one - x - x)));
    ode.coeff[0] = RationalFunction(Polynomial::constant(Rational(-5, 4)));
    return ode;
}

LinearODE substitute_prefactor(const LinearODE& ode, const Rational& a, const Rational& b) {
    Polynomial x = Polynomial::x();
    Polynomial one = Polynomial::constant(Rational(1));
    // w = g'/g for g = x^a (1-x)^b
    RationalFunction w = RationalFunction(Polynomial::constant(a)) / RationalFunction(x) -
                         RationalFunction(Polynomial::constant(b)) / RationalFunction(one - x);
    RationalFunction w2 = w * w + w.derivative();  // g''/g

    LinearODE out;
    out.coeff[2] = ode.coeff[2];
    out.coeff[1] = RationalFunction(Rational(2)) * ode.coeff[2] * w + ode.coeff[1];
    out.coeff[0] = ode.coeff[2] * w2 + ode.coeff[1] * w + ode.coeff[0];

    std::array<Polynomial, 3> p = out.cleared();
    for (int j = 0; j < 3; ++j)
        out.coeff[j] = RationalFunction(p[j]);
    return out;
}

LinearODE translate_to_one(const LinearODE& ode) {
    std::array<Polynomial, 3> p = ode.cleared();
    LinearODE out;
    for (int j = 2; j >= 0; --j) {
        // d/dx = -d/du and x = 1 - u
        Rational factor = (j % 2 == 0) ? Rational(1) : Rational(-1);
        out.coeff[j] = RationalFunction(p[j].compose_affine(Rational(1), Rational(-1)).scaled(factor));
    }
    return out;
}

namespace {

// C_d(sigma) = sum_j p_{j,d+j} sigma (sigma-1) ... (sigma-j+1), as a
// polynomial in sigma of degree <= 2.
struct OffsetTable {
    int d_min = 0, d_max = 0;
    std::array<Polynomial, 3> p;  // cleared coefficients

    Polynomial C(int d) const {
        // falling factorials: 1, s, s^2 - s
        static const Polynomial ff0 = Polynomial::constant(Rational(1));
        static const Polynomial ff1 = Polynomial::x();
        static const Polynomial ff2 = Polynomial::x() * Polynomial::x() - Polynomial::x();
        const Polynomial* ff[3] = {&ff0, &ff1, &ff2};
        Polynomial acc;
        for (int j = 0; j < 3; ++j) {
            Rational pc = p[j].coeff(d + j);
            if (!pc.is_zero())
                acc += ff[j]->scaled(pc);
        }
        return acc;
    }
};

OffsetTable offsets(const LinearODE& ode) {
    OffsetTable t;
    t.p = ode.cleared();
    int dmin = 1000, dmax = -1000;
    for (int j = 0; j < 3; ++j)
        for (int k = 0; k <= t.p[j].degree(); ++k)
            if (!t.p[j].coeff(k).is_zero()) {
                dmin = std::min(dmin, k - j);
                dmax = std::max(dmax, k - j);
            }
    if (dmin > dmax)
        throw DomainError("zero differential operator");
    t.d_min = dmin;
    t.d_max = dmax;
    return t;
}

LinearODE local_form(const LinearODE& ode, int point) {
    if (point == 0)
        return ode;
    if (point == 1)
        return translate_to_one(ode);
    throw DomainError("regular singular point must be 0 or 1");
}

}  // namespace

std::pair<Rational, Rational> indicial_exponents(const LinearODE& ode, int point) {
    OffsetTable t = offsets(local_form(ode, point));
    Polynomial ind;
    int d0 = t.d_min;
    for (int d = t.d_min; d <= t.d_max; ++d) {
        ind = t.C(d);
        if (!ind.is_zero()) {
            d0 = d;
            break;
        }
    }
    (void)d0;
    if (ind.degree() != 2)
        throw DomainError("indicial polynomial is not quadratic");
    Rational a = ind.coeff(2), b = ind.coeff(1), c = ind.coeff(0);
    Rational disc = b * b - Rational(4) * a * c;
    Rational root;
    if (!rational_sqrt(disc, root))
        throw DomainError("indicial exponents are not rational");
    Rational r1 = (-b - root) / (Rational(2) * a);
    Rational r2 = (-b + root) / (Rational(2) * a);
    if (r2 < r1)
        std::swap(r1, r2);
    return {r1, r2};
}

PuiseuxSeries frobenius_solve(const LinearODE& ode, int point, const Rational& exponent, int order) {
    if (order < 0)
        throw DomainError("negative series order");
    OffsetTable t = offsets(local_form(ode, point));
    int d0 = t.d_min;
    while (t.C(d0).is_zero())
        ++d0;
    Polynomial ind = t.C(d0);
    if (!ind.eval(exponent).is_zero())
        throw DomainError("exponent " + exponent.str() + " is not an indicial root");

    std::vector<Rational> a(order + 1);
    a[0] = Rational(1);
    for (int m = 1; m <= order; ++m) {
        Rational rhs(0);
        for (int n = 0; n < m; ++n) {
            int d = d0 + m - n;
            if (d > t.d_max)
                continue;
            Polynomial cd = t.C(d);
            if (cd.is_zero())
                continue;
            rhs -= a[n] * cd.eval(exponent + Rational(n));
        }
        Rational lhs = ind.eval(exponent + Rational(m));
        if (lhs.is_zero()) {
            if (!rhs.is_zero())
                throw LogarithmicCaseError("logarithmic case: resonance at index " + std::to_string(m) +
                                           " with non-vanishing obstruction");
            a[m] = Rational(0);
        } else {
            a[m] = rhs / lhs;
        }
    }
    std::vector<GaussianRational> c(order + 1);
    for (int m = 0; m <= order; ++m)
        c[m] = GaussianRational(a[m]);
    return PuiseuxSeries(exponent, std::move(c));
}

PuiseuxSeries verify_solution(const LinearODE& ode, const PuiseuxSeries& s) {
    std::array<Polynomial, 3> p = ode.cleared();
    PuiseuxSeries acc = s.mul_poly(p[0]);
    PuiseuxSeries d1 = s.derivative();
    acc = acc + d1.mul_poly(p[1]);
    PuiseuxSeries d2 = d1.derivative();
    acc = acc + d2.mul_poly(p[2]);
    return acc;
}

PuiseuxSeries phi1_closed_form(int order) {
    Polynomial one_plus_x({Rational(1), Rational(1)});
    return binomial_series(Rational(5, 2), order).mul_poly(one_plus_x).shifted(Rational(-1, 2));
}

PuiseuxSeries phi2_closed_form(int order) {
    Polynomial one_minus_half_x({Rational(1), Rational(-1, 2)});
    return binomial_series(Rational(-1, 2), order).mul_poly(one_minus_half_x).shifted(Rational(5, 2));
}

PuiseuxSeries phi1_closed_form_at_one(int order) {
    // x = 1-u: (1-u)^{-1/2} (2-u) u^{5/2}
    Polynomial two_minus_u({Rational(2), Rational(-1)});
    return binomial_series(Rational(-1, 2), order).mul_poly(two_minus_u).shifted(Rational(5, 2));
}

PuiseuxSeries phi2_closed_form_at_one(int order) {
    // x = 1-u: (1-u)^{5/2} (1+u)/2 u^{-1/2}
    Polynomial half_one_plus_u({Rational(1, 2), Rational(1, 2)});
    return binomial_series(Rational(5, 2), order).mul_poly(half_one_plus_u).shifted(Rational(-1, 2));
}

std::pair<PuiseuxSeries, PuiseuxSeries> solution_basis(int order) {
    LinearODE ode = derive_bpz(Rational(25), Rational(-5, 4), Rational(-5, 4));
    LinearODE hyp = substitute_prefactor(ode, Rational(5, 2), Rational(5, 2));

    PuiseuxSeries f1 = frobenius_solve(hyp, 0, Rational(-3), order);
    PuiseuxSeries prefactor = binomial_series(Rational(5, 2), order).shifted(Rational(5, 2));
    PuiseuxSeries phi1 = prefactor * f1;
    PuiseuxSeries phi2 = frobenius_solve(ode, 0, Rational(5, 2), order);
    return {phi1, phi2};
}

RigidityReport rigidity_scalar(int order) {
    LinearODE ode = derive_bpz(Rational(25), Rational(-5, 4), Rational(-5, 4));
    auto [phi1, phi2] = solution_basis(order);

    // internal consistency against the closed forms
    if (phi1 != phi1_closed_form(order) || phi2 != phi2_closed_form(order))
        throw DomainError("solution basis disagrees with the closed forms");
    if (!verify_solution(ode, phi1).window_is_zero() || !verify_solution(ode, phi2).window_is_zero())
        throw DomainError("solution basis fails the equation");

    // connection at x = 1: the iterate-side solution is u^{5/2}(1 + O(u));
    // writing psi = a phi1 + (R + b) phi2, the u^{-1/2} component of phi2
    // forces R + b = 0 and the u^{5/2} leading term of phi1 fixes a.
    PuiseuxSeries psi = frobenius_solve(ode, 1, Rational(5, 2), order);
    PuiseuxSeries phi1_u = phi1_closed_form_at_one(order);
    PuiseuxSeries phi2_u = phi2_closed_form_at_one(order);

    GaussianRational r_plus_b = psi.coeff_at(Rational(-1, 2)) / phi2_u.coeff(0);
    GaussianRational a_g = (psi.coeff_at(Rational(5, 2)) -
                            r_plus_b * phi2_u.coeff_at(Rational(5, 2))) /
                           phi1_u.coeff(0);
    PuiseuxSeries recombined = phi1_u.scaled(a_g) + phi2_u.scaled(r_plus_b);
    if (recombined != psi)
        throw DomainError("connection data does not recombine to the local solution at 1");
    if (!a_g.is_rational() || !r_plus_b.is_rational())
        throw DomainError("connection coefficients are not rational");

    RigidityReport rep;
    rep.a = a_g.re;
    // c_n are the coefficients of x^{n-1/2} in a phi1 + b phi2; phi2 starts
    // at x^{5/2}, so c0 only sees phi1.
    rep.c0 = (phi1.coeff_at(Rational(-1, 2)) * a_g).re;
    Rational series_part = (phi1.coeff_at(Rational(5, 2)) * a_g).re;  // 25/32
    rep.c3 = compute_c3(rep.c0);
    rep.b = rep.c3 - series_part;
    rep.rigidity_scalar = r_plus_b.re - rep.b;
    return rep;
}

}  // namespace vircat
