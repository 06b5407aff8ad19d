#pragma once

#include <utility>

#include "virasoro.hpp"

namespace vircat {

// Data of a three-point intertwining pairing <out', Y(left, 1) right> with a
// declared value on the three primaries.
struct ThreePointContext {
    HWModuleDescriptor out_module;
    HWModuleDescriptor left_module;
    HWModuleDescriptor right_module;
    GaussianRational normalization{1};
};

// Exact value of <out_desc, Y(left_desc, 1) right_desc>. Positive modes are
// moved through the intertwining operator with the x = 1 commutator and
// iterate formulas; every step strictly lowers the total descendant level.
GaussianRational reduce_pairing(const ThreePointContext& ctx, const PBWVector& out_desc,
                                const PBWVector& left_desc, const PBWVector& right_desc);

// Pieces of the computation of c3 from c0: the two pairings against the
// level-3 basis of L_{3,1}, the dual-basis expansion pi3, and the final value.
struct C3Report {
    Rational pairing_l3;      // <L(-3)v31, Y(v21,1)v21>
    Rational pairing_l1l2;    // <L(-1)L(-2)v31, Y(v21,1)v21>
    PBWVector pi3;            // component of Y(v21,1)v21 three levels up
    Rational c3;
};

C3Report c3_report(const Rational& c0);
Rational compute_c3(const Rational& c0);

struct DegenerateIndexError : DomainError {
    using DomainError::DomainError;
};

// pi_0 = v and the recursion n(n-3) pi_n = -sum_{i=1}^n L(-i) pi_{n-i} for
// n = 1, 2; the index n = 3 is degenerate and is rejected.
std::vector<PBWVector> pi_recursion(const HWModuleDescriptor& m, int n_max);

// -L(-1)pi2 - L(-2)pi1 - L(-3)pi0 in V(25, -3); equals -1/4 times the level-3
// singular vector.
PBWVector pi_constraint_check();

struct TopLevelReport {
    int r = 0;
    // (h_{r-1,1}, h_{r+1,1}) at t = -1
    std::pair<Rational, Rational> candidate_weights;
    // coefficient pairs ((1-r, -2), (r+3, -2)) applied to
    // (pi0(Y(v,1)w), pi0(Y(L(-1)v,1)w)), ordered to match candidate_weights
    std::pair<std::pair<Rational, Rational>, std::pair<Rational, Rational>> eigenvector_coefficients;
};

TopLevelReport top_level_analysis(int r);

}  // namespace vircat
