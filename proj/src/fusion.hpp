#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "series.hpp"
#include "virasoro.hpp"

namespace vircat {

// Finitely supported multiplicity map over simple-object labels r >= 1.
struct FusionVector {
    std::map<int, long> mult;

    long operator[](int r) const {
        auto it = mult.find(r);
        return it == mult.end() ? 0 : it->second;
    }
    void add(int r, long m);
    bool operator==(const FusionVector& o) const { return mult == o.mult; }

    friend FusionVector operator+(FusionVector a, const FusionVector& b);
    std::string str() const;
};

// sl2-type product: multiplicity 1 on k = |r-rp|+1, ..., r+rp-1 with
// k + r + rp odd.
FusionVector fuse(int r, int rp);

// Product of a fusion vector with a single label.
FusionVector fuse(const FusionVector& v, int rp);

// sum_k k * fuse(r,rp)[k] == r * rp
bool fusion_dimension_check(int r, int rp);

// The exact-sequence skeleton resolving L_{2,1} x L_{r,1}.
struct TensorL21Structure {
    int r = 0;
    std::string sub, quot;  // non-zero Verma-quotient ends of the sequence, r >= 2
    FusionVector resolved;
};

TensorL21Structure tensor_L21_structure(int r);

enum class AlgebraName { WMinusOne, X, MMinusOne, IMinusOne, IGeneric };

AlgebraName parse_algebra_name(const std::string& s);
std::string algebra_name_str(AlgebraName n);

struct AlgebraSummand {
    int index = 0;            // n for W(-1)/X/M(-1), r for I(-1), s for generic
    long multiplicity = 0;    // dimension of the multiplicity space
    std::vector<int> labels;  // module labels; pairs for the two-sided algebras
    Rational lowest_weight;
    int quotient_level = 0;   // relation level of each tensor factor L_{label,1}
};

// First `count` summands of the named extension algebra.
std::vector<AlgebraSummand> decompose_algebra(AlgebraName name, int count);

struct InduceWResult {
    AlgebraName target = AlgebraName::WMinusOne;  // W(-1) or X
    long multiplicity = 0;
};

// Induction from L_{r,1}: r copies of W(-1) for odd r, of X for even r.
InduceWResult induce_W(int r);

// Induction of M_{r,rp} to the two-sided algebra, as W-labels.
FusionVector induce_centralizer(int r, int rp);

// W_r x W_rp with the sl2 bounds.
FusionVector centralizer_fusion(int r, int rp);

// Triple product of sl2-type fusions at generic level.
std::map<std::array<int, 3>, long> generic_centralizer_fusion(int r1, int r1p, int s1,
                                                              int r2, int r2p, int s2);

// Compares sum_s (s,s).(r,rp) with sum_k sum_s (s,s).(k,1), k running over
// induce_centralizer(r,rp), on components stable under enlarging the cutoff.
bool algebra_fusion_identity_check(int r, int rp, int cutoff);

struct SummandCharacter {
    AlgebraSummand summand;
    PuiseuxSeries character;
    bool partial_sum = true;  // every weight receives contributions from
                              // infinitely many summands
};

std::vector<SummandCharacter> algebra_character(AlgebraName name, const Rational& weight_floor,
                                                int summand_bound, int order);

}  // namespace vircat
