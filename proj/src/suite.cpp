#include "suite.hpp"

#include "bpz.hpp"
#include "correlator.hpp"
#include "fusion.hpp"
#include "qcat.hpp"
#include "virasoro.hpp"

namespace vircat {

namespace {

struct SuiteBuilder {
    std::vector<SuiteItem> items;

    void check(const std::string& id, const std::string& description, const std::string& expected,
               const std::string& actual) {
        items.push_back({id, description, expected, actual, expected == actual});
    }

    void check_bool(const std::string& id, const std::string& description, bool ok) {
        check(id, description, "true", ok ? "true" : "false");
    }
};

std::string fusion_str(const FusionVector& v) {
    return v.str();
}

}  // namespace

std::vector<SuiteItem> run_reference_suite() {
    SuiteBuilder b;
    Rational t(-1);

    // central charges and weights
    b.check("central-charge-neg1", "c(t) at t = -1", "25", central_charge_from_t(t).str());
    b.check("central-charge-pos1", "c(t) at t = 1", "1", central_charge_from_t(Rational(1)).str());
    b.check("weight-h21", "h(2,1) at c = 25", "-5/4", h_rs(t, 2, 1).str());
    b.check("weight-h31", "h(3,1) at c = 25", "-3", h_rs(t, 3, 1).str());
    {
        bool ok = true;
        for (int r = 1; r <= 6; ++r)
            ok = ok && h_rs(Rational(1), r, 1) == Rational((r - 1) * (r - 1), 4);
        b.check_bool("weight-c1-family", "h(r,1) at c = 1 equals (r-1)^2/4 for r <= 6", ok);
    }

    // mode action and Gram data
    HWModuleDescriptor v25m3 = verma(Rational(25), Rational(-3));
    {
        PBWVector w = act_mode(3, PBWVector::monomial(v25m3, {3}));
        b.check("mode-action-l3", "L(3) on L(-3)v in V(25,-3)", "32*v", w.str());
    }
    HWModuleDescriptor l21 = simple_rs(t, 2);
    HWModuleDescriptor l31 = simple_rs(t, 3);
    {
        GramMatrix g = gram_matrix(l31, 3);
        std::string got;
        for (int i = 0; i < g.entries.rows; ++i)
            for (int j = 0; j < g.entries.cols; ++j)
                got += g.entries.at(i, j).str() + (i == 1 && j == 1 ? "" : ",");
        b.check("gram-l31-level3", "Gram matrix of L(3,1) at level 3 in basis {L(-3)v, L(-1)L(-2)v}",
                "32,2,2,-55", got);
    }
    {
        std::vector<PBWVector> db = dual_basis(l31, 3);
        b.check("dual-basis-l31-0", "dual vector of L(-3)v in L(3,1)",
                "55/1764*L(-3)*v + 1/882*L(-1)L(-2)*v", db[0].str());
        b.check("dual-basis-l31-1", "dual vector of L(-1)L(-2)v in L(3,1)",
                "1/882*L(-3)*v + -8/441*L(-1)L(-2)*v", db[1].str());
    }

    // singular vectors
    {
        auto sv = singular_vector(verma(Rational(25), Rational(-5, 4)), 2);
        b.check("singular-level2", "singular vector of V(25,-5/4) at level 2",
                "1*L(-2)*v + 1*L(-1)L(-1)*v", sv.size() == 1 ? sv[0].str() : "count != 1");
        auto sv3 = singular_vector(v25m3, 3);
        b.check("singular-level3", "singular vector of V(25,-3) at level 3",
                "2*L(-3)*v + 4*L(-1)L(-2)*v + 1*L(-1)L(-1)L(-1)*v",
                sv3.size() == 1 ? sv3[0].str() : "count != 1");
        auto fsl = first_singular_level(verma(Rational(25), h_rs(t, 2, 1)), 8);
        b.check("first-singular-h21", "first degenerate level of V(25, h(2,1))", "2",
                fsl ? std::to_string(*fsl) : "none");
    }

    // intertwining pairings and c3
    {
        PBWVector v21 = PBWVector::highest_weight_vector(l21);
        ThreePointContext ctx{l31, l21, l21, GaussianRational(1)};
        b.check("pairing-l3", "<L(-3)v31, Y(v21,1)v21>", "-11/2",
                reduce_pairing(ctx, PBWVector::monomial(l31, {3}), v21, v21).str());
        b.check("pairing-l1l2", "<L(-1)L(-2)v31, Y(v21,1)v21>", "17/4",
                reduce_pairing(ctx, PBWVector::monomial(l31, {2, 1}), v21, v21).str());
        C3Report rep = c3_report(Rational(1, 2));
        b.check("pi3", "level-3 component of Y(v21,1)v21",
                "-1/6*L(-3)*v + -1/12*L(-1)L(-2)*v", rep.pi3.str());
        b.check("c3-from-c0", "c3 at normalization c0 = 1/2", "9/32", rep.c3.str());
    }

    // coefficient recursion
    {
        auto pi = pi_recursion(v25m3, 2);
        b.check("pi1", "first recursion coefficient", "1/2*L(-1)*v", pi[1].str());
        b.check("pi2", "second recursion coefficient", "1/2*L(-2)*v + 1/4*L(-1)L(-1)*v",
                pi[2].str());
        b.check("pi-constraint", "index-3 constraint vector",
                "-1/2*L(-3)*v + -1*L(-1)L(-2)*v + -1/4*L(-1)L(-1)L(-1)*v",
                pi_constraint_check().str());
        PBWVector image(l31, pi_constraint_check().terms());
        b.check_bool("pi-constraint-quotient", "constraint vector vanishes in L(3,1)",
                     image.is_zero());
    }

    // top-level analysis
    {
        TopLevelReport rep = top_level_analysis(2);
        bool ok = rep.candidate_weights.first == Rational(0) &&
                  rep.candidate_weights.second == Rational(-3) &&
                  rep.eigenvector_coefficients.first == std::pair{Rational(-1), Rational(-2)} &&
                  rep.eigenvector_coefficients.second == std::pair{Rational(5), Rational(-2)};
        b.check_bool("top-level-r2", "degree-0 eigendata for L(2,1) x L(2,1)", ok);
    }

    // the second-order equation and its solutions
    {
        LinearODE ode = derive_bpz(Rational(25), Rational(-5, 4), Rational(-5, 4));
        auto p = ode.cleared();
        b.check("ode-phi2-coeff", "phi'' coefficient after clearing x(1-x)", "x^2 - 2*x^3 + x^4",
                p[2].str());
        b.check("ode-phi1-coeff", "phi' coefficient after clearing x(1-x)", "-x + 3*x^2 - 2*x^3",
                p[1].str());
        b.check("ode-phi0-coeff", "phi coefficient after clearing x(1-x)", "-5/4", p[0].str());
        auto f = substitute_prefactor(ode, Rational(5, 2), Rational(5, 2)).cleared();
        b.check("ode-hypergeometric", "reduced equation for f", "x - x^2 | 4 - 8*x | -10",
                f[2].str() + " | " + f[1].str() + " | " + f[0].str());
        auto [phi1, phi2] = solution_basis(20);
        b.check_bool("phi1-series", "Frobenius solution matches x^{-1/2}(1-x)^{5/2}(1+x)",
                     phi1 == phi1_closed_form(20));
        b.check_bool("phi2-series", "Frobenius solution matches x^{5/2}(1-x)^{-1/2}(1-x/2)",
                     phi2 == phi2_closed_form(20));
        b.check("phi1-x52-coeff", "x^{5/2} coefficient of (1/2)phi1", "25/32",
                (phi1.coeff_at(Rational(5, 2)) * GaussianRational(Rational(1, 2))).str());
        RigidityReport rep = rigidity_scalar();
        b.check("rigidity-c0", "normalization c0", "1/2", rep.c0.str());
        b.check("rigidity-c3", "series coefficient c3", "9/32", rep.c3.str());
        b.check("rigidity-a", "connection coefficient a", "1/2", rep.a.str());
        b.check("rigidity-scalar", "rigidity scalar", "1/2", rep.rigidity_scalar.str());
    }

    // fusion ring
    b.check("fuse-2-2", "L(2,1) x L(2,1)", "{1: 1, 3: 1}", fusion_str(fuse(2, 2)));
    b.check("tensor-structure-r2", "resolved decomposition of L(2,1) x L(2,1)", "{1: 1, 3: 1}",
            fusion_str(tensor_L21_structure(2).resolved));
    {
        auto w = decompose_algebra(AlgebraName::WMinusOne, 3);
        std::string got;
        for (const auto& s : w)
            got += "(" + std::to_string(s.multiplicity) + ",L" + std::to_string(s.labels[0]) +
                   "," + s.lowest_weight.str() + ")";
        b.check("decompose-w", "first three summands of W(-1)", "(1,L1,0)(3,L3,-3)(5,L5,-8)", got);
        auto x = decompose_algebra(AlgebraName::X, 1);
        b.check("decompose-x", "first summand of X", "(2,L2,-5/4)",
                "(" + std::to_string(x[0].multiplicity) + ",L" + std::to_string(x[0].labels[0]) +
                    "," + x[0].lowest_weight.str() + ")");
        auto ia = decompose_algebra(AlgebraName::IMinusOne, 3);
        std::string goti;
        for (const auto& s : ia)
            goti += "(" + std::to_string(s.labels[0]) + "," + std::to_string(s.labels[1]) + ":" +
                    s.lowest_weight.str() + ")";
        b.check("decompose-i", "first three summands of the two-sided extension",
                "(1,1:0)(2,2:-1)(3,3:-2)", goti);
    }
    {
        auto i4 = induce_W(4);
        auto i7 = induce_W(7);
        b.check("induce-w-4", "induction of L(4,1)", "X x4",
                algebra_name_str(i4.target) + " x" + std::to_string(i4.multiplicity));
        b.check("induce-w-7", "induction of L(7,1)", "W(-1) x7",
                algebra_name_str(i7.target) + " x" + std::to_string(i7.multiplicity));
        bool ok = true;
        for (int r = 1; r <= 6; ++r)
            ok = ok && induce_centralizer(r, 1) == fuse(r, 1);
        b.check_bool("induce-centralizer-unit", "induction of M(r,1) is W_r for r <= 6", ok);
        b.check("centralizer-fusion-2-2", "W_2 x W_2", "{1: 1, 3: 1}",
                fusion_str(centralizer_fusion(2, 2)));
    }

    // quantum-category model
    {
        DualityData d = standard_duality_data();
        b.check("intrinsic-dimension", "e o i on the generator", "2", (d.e * d.i).m.at(0, 0).str());
        MatrixMap id2 = MatrixMap::identity(2);
        MatrixMap fm = d.f + id2.scaled(GaussianRational(-1));
        b.check_bool("f-reflection", "(f - Id)^2 = Id", fm * fm == id2);
        b.check_bool("rigidity-twisted",
                     "zig-zag compositions are the identity with the cocycle twist",
                     rigidity_composition_1(d, true) == MatrixMap::identity(1) &&
                         rigidity_composition_2(d, true) == MatrixMap::identity(1));
        b.check_bool("rigidity-untwisted-sign",
                     "the untwisted zig-zag composition is minus the identity",
                     rigidity_composition_1(d, false) ==
                         MatrixMap::identity(1).scaled(GaussianRational(-1)));
        auto sols = braiding_solutions();
        b.check("braiding-count", "number of braidings on the twisted category", "2",
                std::to_string(sols.size()));
        b.check_bool("braiding-mutual-inverse", "the two braidings are mutual inverses",
                     sols[0] * sols[1] == id2);
        b.check_bool("braiding-e-O25", "e o R = i e for the braiding matching c = 25",
                     d.e * select_braiding(CategoryChoice::O25) ==
                         d.e.scaled(GaussianRational::i()));
        b.check_bool("braiding-e-O1", "e o R = -i e for the braiding matching c = 1",
                     d.e * select_braiding(CategoryChoice::O1) ==
                         d.e.scaled(-GaussianRational::i()));
        b.check_bool("hexagon-both", "both braidings satisfy the braiding equation",
                     hexagon_check(sols[0]) && hexagon_check(sols[1]));
        auto q2 = q_from_dimension(Rational(2));
        b.check("q-from-dimension-2", "quantum parameter with d = 2", "-1",
                q2.size() == 1 ? q2[0].str() : "count != 1");
        auto qm2 = q_from_dimension(Rational(-2));
        b.check("q-from-dimension-neg2", "quantum parameter with d = -2", "1",
                qm2.size() == 1 ? qm2[0].str() : "count != 1");
    }

    // twists and monodromy parity
    b.check("twist-25-2", "ribbon twist on L(2,1) at c = 25", "-i", twist_scalar(25, 2).str());
    b.check("twist-25-3", "ribbon twist on L(3,1) at c = 25", "1", twist_scalar(25, 3).str());
    b.check("twist-1-2", "ribbon twist on L(2,1) at c = 1", "i", twist_scalar(1, 2).str());
    {
        bool ok = true;
        for (int r = 1; r <= 10; ++r)
            ok = ok && monodromy_parity_check(r, 10) == (r % 2 == 1);
        b.check_bool("monodromy-parity", "integral monodromy exactly at odd labels, r <= 10", ok);
    }

    return b.items;
}

bool suite_all_pass(const std::vector<SuiteItem>& items) {
    for (const auto& it : items)
        if (!it.pass)
            return false;
    return true;
}

}  // namespace vircat
