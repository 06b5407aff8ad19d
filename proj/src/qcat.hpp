#pragma once

#include <array>
#include <vector>

#include "linalg.hpp"
#include "rational.hpp"

namespace vircat {

// Morphism between tensor words in the generator X (dim 2, odd parity); the
// unit object is the empty word. Dimensions are 2^{word length}.
struct MatrixMap {
    int src_factors = 0, tgt_factors = 0;
    Mat<GaussianRational> m;

    static MatrixMap identity(int factors);
    friend MatrixMap operator*(const MatrixMap& a, const MatrixMap& b);  // composition
    friend MatrixMap operator+(const MatrixMap& a, const MatrixMap& b);
    MatrixMap scaled(const GaussianRational& s) const;
    friend bool operator==(const MatrixMap& a, const MatrixMap& b);
    friend bool operator!=(const MatrixMap& a, const MatrixMap& b) { return !(a == b); }
};

// Kronecker product on tensor words.
MatrixMap tensor_map(const MatrixMap& a, const MatrixMap& b);

struct DualityData {
    MatrixMap e;  // X @ X -> 1, the symplectic form
    MatrixMap i;  // 1 -> X @ X, its inverse copairing
    MatrixMap f;  // i o e
};

// e(x+ @ x-) = 1, e(x- @ x+) = -1, i(1) = x+ @ x- - x- @ x+, f = i o e.
// The gauge parameter rescales (e, i) -> (g e, g^{-1} i) and leaves f fixed.
DualityData standard_duality_data();
DualityData duality_data_with_gauge(const GaussianRational& g);

// Sign of the associativity isomorphism on a triple of odd objects:
// -1 with the 3-cocycle twist, +1 without.
GaussianRational associator_sign(bool twisted);

// Zig-zag compositions; both are the identity exactly when twisted.
MatrixMap rigidity_composition_1(const DualityData& d, bool twisted);
MatrixMap rigidity_composition_2(const DualityData& d, bool twisted);

// Quadratic constraints on R = a f + b Id imposed by the hexagon-derived
// braiding equation, expanded in the monomial basis (a^2, ab, b^2, a, b, 1).
struct BraidingConstraints {
    std::array<Rational, 6> must_vanish;  // coefficient of the independent i@Id leg
    std::array<Rational, 6> must_be_one;  // coefficient of the A(Id@i) leg
};

BraidingConstraints braiding_constraint_polynomials();

// The two braidings +-i(f - Id), solved exactly from the constraints and
// verified against the full matrix equation.
std::vector<MatrixMap> braiding_solutions();

// Both sides of the braiding equation as 8x2 matrix compositions with the
// twisted associator.
MatrixMap hexagon_lhs();
MatrixMap hexagon_rhs(const MatrixMap& r);
bool hexagon_check(const MatrixMap& r);

enum class CategoryChoice { O25, O1 };

// O25 -> i(f - Id), O1 -> -i(f - Id); the two are mutually inverse.
MatrixMap select_braiding(CategoryChoice c);

// Solutions of -q - 1/q = d over Q(i); empty when none exists there.
std::vector<GaussianRational> q_from_dimension(const Rational& d);

// e^{2 pi i h_{r,1}} at central charge 1 or 25; requires 4h integral.
GaussianRational twist_scalar(int c_label, int r);

// True iff h_{r,1} + h_{rp,1} - h_{k,1} at c = 1 is an integer for every
// rp <= r_range and every admissible k; equivalent to r being odd.
bool monodromy_parity_check(int r, int r_range);

}  // namespace vircat
