#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "linalg.hpp"
#include "rational.hpp"
#include "series.hpp"

namespace vircat {

// Weakly decreasing sequence of positive integers, indexing the PBW monomial
// L(-lam_k)...L(-lam_1) acting on the highest-weight vector (the largest part
// acts first, so the written word carries the smallest part leftmost; the
// partition (2,1) is the monomial L(-1)L(-2)v).
using Partition = std::vector<int>;

int partition_level(const Partition& p);
int partition_ones(const Partition& p);
std::vector<Partition> partitions_of(int n);  // descending lexicographic

// Orders partitions descending-lexicographically, matching basis order.
struct PartitionOrder {
    bool operator()(const Partition& a, const Partition& b) const;
};

using TermMap = std::map<Partition, GaussianRational, PartitionOrder>;

struct QuotientRelation {
    int level = 0;
    // What L(-1)^level v equals in the quotient; keys never reach `level` ones.
    std::map<Partition, Rational, PartitionOrder> replacement;
};

struct HWModuleDescriptor {
    Rational central_charge;
    Rational highest_weight;
    std::optional<QuotientRelation> quotient;

    bool same_module(const HWModuleDescriptor& o) const;
};

HWModuleDescriptor verma(const Rational& c, const Rational& h);
// Quotient of the Verma module by the singular vector at the given level.
HWModuleDescriptor simple_quotient(const Rational& c, const Rational& h, int level);
// L_{r,1} at central charge c(t): quotient of V(c, h_{r,1}) at level r.
HWModuleDescriptor simple_rs(const Rational& t, int r);

class PBWVector {
public:
    PBWVector() = default;
    PBWVector(HWModuleDescriptor m, TermMap terms);

    static PBWVector highest_weight_vector(const HWModuleDescriptor& m);
    static PBWVector monomial(const HWModuleDescriptor& m, const Partition& p,
                              const GaussianRational& coeff = GaussianRational(1));

    const HWModuleDescriptor& module() const { return module_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    GaussianRational coeff(const Partition& p) const;

    PBWVector operator-() const;
    PBWVector scaled(const GaussianRational& s) const;
    friend PBWVector operator+(const PBWVector& a, const PBWVector& b);
    friend PBWVector operator-(const PBWVector& a, const PBWVector& b);
    friend bool operator==(const PBWVector& a, const PBWVector& b);
    friend bool operator!=(const PBWVector& a, const PBWVector& b) { return !(a == b); }

    // Restriction to the level-n graded component.
    PBWVector graded_component(int n) const;

    // "1*L(-1)L(-2)*v + ..." with coefficients printed exactly.
    std::string str() const;

private:
    void prune();
    HWModuleDescriptor module_;
    TermMap terms_;
};

Rational central_charge_from_t(const Rational& t);
Rational h_rs(const Rational& t, long r, long s);

// Applies L_n with normal ordering, highest-weight annihilation and, in a
// quotient module, the rewriting rule of the quotient relation.
PBWVector act_mode(int n, const PBWVector& v);

// Contravariant (Shapovalov) bilinear form, <v, v> = 1, adjoint L(-n) -> L(n).
GaussianRational contravariant_pairing(const PBWVector& u, const PBWVector& w);

struct GramMatrix {
    int level = 0;
    std::vector<Partition> basis;
    Mat<Rational> entries;
};

std::vector<Partition> module_basis(const HWModuleDescriptor& m, int level);
GramMatrix gram_matrix(const HWModuleDescriptor& m, int level);

// Basis of the kernel of the level-n Gram matrix of a Verma module, each
// normalized so the coefficient of L(-1)^n is 1 when non-zero. All returned
// vectors are annihilated by every positive mode.
std::vector<PBWVector> singular_vector(const HWModuleDescriptor& m, int level);

std::optional<int> first_singular_level(const HWModuleDescriptor& m, int max_level);

struct DegenerateFormError : DomainError {
    using DomainError::DomainError;
};

// Vectors b*_lambda with <b*_lambda, L(-mu)v> = delta_{lambda,mu}.
std::vector<PBWVector> dual_basis(const HWModuleDescriptor& m, int level);

// Graded dimension q^h * sum dim(n) q^n, without the q^{-c/24} prefactor.
PuiseuxSeries character(const HWModuleDescriptor& m, int order);

}  // namespace vircat
