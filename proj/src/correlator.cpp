#include "correlator.hpp"

namespace vircat {

namespace {

// integer binomial C(n, k) for possibly negative n
Rational binom_int(long n, long k) {
    return binomial(Rational(n), k);
}

struct Reducer {
    const ThreePointContext& ctx;

    Rational wt_out(const Partition& p) const {
        return ctx.out_module.highest_weight + Rational(partition_level(p));
    }
    Rational wt_left(const Partition& p) const {
        return ctx.left_module.highest_weight + Rational(partition_level(p));
    }
    Rational wt_right(const Partition& p) const {
        return ctx.right_module.highest_weight + Rational(partition_level(p));
    }

    GaussianRational reduce_vec(const TermMap& out, const TermMap& left, const TermMap& right) {
        GaussianRational acc(0);
        for (const auto& [po, co] : out)
            for (const auto& [pl, cl] : left)
                for (const auto& [pr, cr] : right)
                    acc += co * cl * cr * mono(po, pl, pr);
        return acc;
    }

    // <P_po v', Y(P_pl v1, 1) P_pr v2> with the primary pairing normalized to 1.
    GaussianRational mono(const Partition& po, const Partition& pl, const Partition& pr) {
        if (!po.empty())
            return peel_out(po, pl, pr);
        if (!pl.empty())
            return peel_left(pl, pr);
        if (!pr.empty())
            return peel_right(pr);
        return GaussianRational(1);
    }

    GaussianRational single(const HWModuleDescriptor& m, int n, const Partition& p,
                            const Partition& a, const Partition& b, int slot) {
        PBWVector w = act_mode(n, PBWVector::monomial(m, p));
        switch (slot) {
            case 1: return reduce_vec(w.terms(), {{a, GaussianRational(1)}}, {{b, GaussianRational(1)}});
            case 2: return reduce_vec({{a, GaussianRational(1)}}, w.terms(), {{b, GaussianRational(1)}});
            default: return reduce_vec({{a, GaussianRational(1)}}, {{b, GaussianRational(1)}}, w.terms());
        }
    }

    // Move the outermost lowering operator of the out slot across the pairing:
    // <L(-n) u'', X> = <u'', L(n) X>, then the commutator formula at x = 1.
    GaussianRational peel_out(const Partition& po, const Partition& pl, const Partition& pr) {
        int n = po.back();
        Partition tail(po.begin(), po.end() - 1);

        GaussianRational acc(0);
        // Y(w1,1) L(n) w2
        acc += single(ctx.right_module, n, pr, tail, pl, 3);
        // i = 0 term: Y(L(-1)w1, 1); rewrite through [L0, Y(w1,1)]
        Rational f0 = wt_out(tail) - wt_left(pl) - wt_right(pr);
        acc += GaussianRational(f0) * mono(tail, pl, pr);
        // i = 1 term: (n+1) Y(L0 w1, 1)
        acc += GaussianRational(Rational(n + 1) * wt_left(pl)) * mono(tail, pl, pr);
        // i >= 2 terms lower the left slot
        int top = std::min<long>(n + 1, partition_level(pl) + 1);
        for (int i = 2; i <= top; ++i)
            acc += GaussianRational(binom_int(n + 1, i)) * single(ctx.left_module, i - 1, pl, tail, pr, 2);
        return acc;
    }

    // Remove the outermost lowering operator from the left slot with the
    // iterate formula; the out vector is primary here, so all L(-)-terms on
    // the out side vanish.
    GaussianRational peel_left(const Partition& pl, const Partition& pr) {
        int mu = pl.back();
        Partition tail(pl.begin(), pl.end() - 1);

        if (mu == 1) {
            Rational f = ctx.out_module.highest_weight - wt_left(tail) - wt_right(pr);
            return GaussianRational(f) * mono({}, tail, pr);
        }

        GaussianRational acc(0);
        Rational sign_mu(mu % 2 == 0 ? 1 : -1);
        int top = partition_level(pr) + 1;
        for (int i = 0; i <= top; ++i) {
            Rational coeff = binom_int(1 - mu, i) * sign_mu;
            if (i % 2 == 1)
                coeff = -coeff;
            if (coeff.is_zero())
                continue;
            GaussianRational term;
            if (i == 0) {
                term = single(ctx.right_module, -1, pr, {}, tail, 3);
            } else if (i == 1) {
                term = GaussianRational(wt_right(pr)) * mono({}, tail, pr);
            } else {
                term = single(ctx.right_module, i - 1, pr, {}, tail, 3);
            }
            acc += GaussianRational(coeff) * term;
        }
        return acc;
    }

    // Move the outermost lowering operator of the right slot through the
    // intertwining operator; out and left are primary here.
    GaussianRational peel_right(const Partition& pr) {
        int mu = pr.back();
        Partition tail(pr.begin(), pr.end() - 1);

        GaussianRational acc(0);
        // i = 0: Y(L(-1) w1, 1), rewritten through [L0, Y(w1,1)]
        Rational f0 = ctx.out_module.highest_weight - ctx.left_module.highest_weight - wt_right(tail);
        acc += GaussianRational(binom_int(1 - mu, 0) * f0) * mono({}, {}, tail);
        // i = 1: Y(L0 w1, 1)
        acc += GaussianRational(binom_int(1 - mu, 1) * ctx.left_module.highest_weight) * mono({}, {}, tail);
        return -acc;
    }
};

}  // namespace

GaussianRational reduce_pairing(const ThreePointContext& ctx, const PBWVector& out_desc,
                                const PBWVector& left_desc, const PBWVector& right_desc) {
    if (!out_desc.module().same_module(ctx.out_module) ||
        !left_desc.module().same_module(ctx.left_module) ||
        !right_desc.module().same_module(ctx.right_module))
        throw DomainError("pairing of vectors from modules outside the declared context");
    Reducer red{ctx};
    return ctx.normalization * red.reduce_vec(out_desc.terms(), left_desc.terms(), right_desc.terms());
}

C3Report c3_report(const Rational& c0) {
    Rational t(-1);
    HWModuleDescriptor l21 = simple_rs(t, 2);
    HWModuleDescriptor l31 = simple_rs(t, 3);

    PBWVector v21 = PBWVector::highest_weight_vector(l21);
    PBWVector l3_out = PBWVector::monomial(l31, {3});
    PBWVector l1l2_out = PBWVector::monomial(l31, {2, 1});

    ThreePointContext ctx322{l31, l21, l21, GaussianRational(1)};
    C3Report rep;
    rep.pairing_l3 = reduce_pairing(ctx322, l3_out, v21, v21).re;
    rep.pairing_l1l2 = reduce_pairing(ctx322, l1l2_out, v21, v21).re;

    std::vector<PBWVector> duals = dual_basis(l31, 3);
    // module_basis order at level 3 is [(3), (2,1)]
    rep.pi3 = duals[0].scaled(GaussianRational(rep.pairing_l3)) +
              duals[1].scaled(GaussianRational(rep.pairing_l1l2));

    ThreePointContext ctx223{l21, l21, l31, GaussianRational(c0)};
    PBWVector v21_out = PBWVector::highest_weight_vector(l21);
    rep.c3 = reduce_pairing(ctx223, v21_out, v21, rep.pi3).re;
    return rep;
}

Rational compute_c3(const Rational& c0) {
    return c3_report(c0).c3;
}

std::vector<PBWVector> pi_recursion(const HWModuleDescriptor& m, int n_max) {
    if (m.central_charge != Rational(25) || m.highest_weight != Rational(-3))
        throw DomainError("the coefficient recursion lives in V(25, -3) or its quotient");
    if (n_max >= 3)
        throw DegenerateIndexError("degenerate index: n(n-3) = 0");
    if (n_max < 0)
        throw DomainError("n_max must be non-negative");
    std::vector<PBWVector> pi;
    pi.push_back(PBWVector::highest_weight_vector(m));
    for (int n = 1; n <= n_max; ++n) {
        PBWVector rhs = PBWVector(m, {});
        for (int i = 1; i <= n; ++i)
            rhs = rhs + act_mode(-i, pi[n - i]);
        Rational factor = Rational(-1) / Rational(static_cast<long>(n) * (n - 3));
        pi.push_back(rhs.scaled(GaussianRational(factor)));
    }
    return pi;
}

PBWVector pi_constraint_check() {
    HWModuleDescriptor m = verma(Rational(25), Rational(-3));
    std::vector<PBWVector> pi = pi_recursion(m, 2);
    PBWVector u = act_mode(-1, pi[2]) + act_mode(-2, pi[1]) + act_mode(-3, pi[0]);
    return -u;
}

TopLevelReport top_level_analysis(int r) {
    if (r < 1)
        throw DomainError("label r must be positive");
    Rational t(-1);
    TopLevelReport rep;
    rep.r = r;
    rep.candidate_weights = {h_rs(t, r - 1, 1), h_rs(t, r + 1, 1)};
    rep.eigenvector_coefficients = {{Rational(1 - r), Rational(-2)},
                                    {Rational(r + 3), Rational(-2)}};
    return rep;
}

}  // namespace vircat
