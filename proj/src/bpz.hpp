#pragma once

#include <array>
#include <utility>

#include "polynomial.hpp"
#include "series.hpp"

namespace vircat {

// Second-order linear ODE c2 phi'' + c1 phi' + c0 phi = 0 with rational
// function coefficients, stored with cleared (polynomial) denominators.
struct LinearODE {
    std::array<RationalFunction, 3> coeff;  // index j multiplies phi^(j)

    // Cleared polynomial coefficients, scaled so the lowest non-zero
    // coefficient of the phi''-polynomial is 1.
    std::array<Polynomial, 3> cleared() const;
};

struct UnsupportedParameterError : DomainError {
    using DomainError::DomainError;
};

struct LogarithmicCaseError : DomainError {
    using DomainError::DomainError;
};

// The second-order equation satisfied by the four-point functions built from
// a degenerate field with a level-2 singular vector. Only the instance
// c = 25, h_deg = h_other = -5/4 is implemented; the level-2 singular vector
// of V(c, h_deg) is recomputed as a precondition check.
LinearODE derive_bpz(const Rational& c, const Rational& h_deg, const Rational& h_other);

// Equation for f after the substitution phi = x^a (1-x)^b f.
LinearODE substitute_prefactor(const LinearODE& ode, const Rational& a, const Rational& b);

// Equation in the local coordinate u = 1 - x.
LinearODE translate_to_one(const LinearODE& ode);

// Roots of the indicial equation at x = 0 (or x = 1 after translation),
// smaller root first. Throws when the roots are not rational.
std::pair<Rational, Rational> indicial_exponents(const LinearODE& ode, int point);

// Frobenius solution x^{exponent} (1 + O(x)) at the given regular singular
// point (series in x at 0, in 1-x at 1). At a resonant index whose
// obstruction vanishes the free coefficient is set to 0; a non-vanishing
// obstruction raises LogarithmicCaseError.
PuiseuxSeries frobenius_solve(const LinearODE& ode, int point, const Rational& exponent, int order);

// Residual of substituting the series into the equation (after clearing
// denominators); identically zero through the valid window for solutions.
PuiseuxSeries verify_solution(const LinearODE& ode, const PuiseuxSeries& s);

// Closed forms phi1 = x^{-1/2}(1-x)^{5/2}(1+x), phi2 = x^{5/2}(1-x)^{-1/2}(1-x/2)
// as exact truncated series (binomial expansions).
PuiseuxSeries phi1_closed_form(int order);
PuiseuxSeries phi2_closed_form(int order);

// The same closed forms expanded in the local coordinate u = 1 - x.
PuiseuxSeries phi1_closed_form_at_one(int order);
PuiseuxSeries phi2_closed_form_at_one(int order);

// Solution basis of the paper's equation near 0: phi1 from the Frobenius
// solution of the hypergeometric reduction times the x^{5/2}(1-x)^{5/2}
// prefactor, phi2 from the direct Frobenius solution at exponent 5/2.
std::pair<PuiseuxSeries, PuiseuxSeries> solution_basis(int order);

struct RigidityReport {
    Rational c0, c3, a, b, rigidity_scalar;
};

// Full chain: solution basis, connection at x = 1 fixing a = 1/2, series
// coefficient 25/32, c3 from the intertwining-operator reduction, and
// R = -b.
RigidityReport rigidity_scalar(int order = 24);

}  // namespace vircat
