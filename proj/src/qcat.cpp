#include "qcat.hpp"

#include "fusion.hpp"
#include "virasoro.hpp"

namespace vircat {

namespace {

int dim_of(int factors) {
    return 1 << factors;
}

}  // namespace

MatrixMap MatrixMap::identity(int factors) {
    return {factors, factors, Mat<GaussianRational>::identity(dim_of(factors))};
}

MatrixMap operator*(const MatrixMap& a, const MatrixMap& b) {
    if (a.src_factors != b.tgt_factors)
        throw DomainError("composition of maps with mismatched tensor words");
    return {b.src_factors, a.tgt_factors, a.m * b.m};
}

MatrixMap operator+(const MatrixMap& a, const MatrixMap& b) {
    if (a.src_factors != b.src_factors || a.tgt_factors != b.tgt_factors)
        throw DomainError("sum of maps with mismatched tensor words");
    return {a.src_factors, a.tgt_factors, a.m + b.m};
}

MatrixMap MatrixMap::scaled(const GaussianRational& s) const {
    return {src_factors, tgt_factors, m.scaled(s)};
}

bool operator==(const MatrixMap& a, const MatrixMap& b) {
    return a.src_factors == b.src_factors && a.tgt_factors == b.tgt_factors && a.m == b.m;
}

MatrixMap tensor_map(const MatrixMap& a, const MatrixMap& b) {
    int rows = dim_of(a.tgt_factors) * dim_of(b.tgt_factors);
    int cols = dim_of(a.src_factors) * dim_of(b.src_factors);
    Mat<GaussianRational> k(rows, cols);
    for (int i1 = 0; i1 < dim_of(a.tgt_factors); ++i1)
        for (int j1 = 0; j1 < dim_of(a.src_factors); ++j1)
            for (int i2 = 0; i2 < dim_of(b.tgt_factors); ++i2)
                for (int j2 = 0; j2 < dim_of(b.src_factors); ++j2)
                    k.at(i1 * dim_of(b.tgt_factors) + i2, j1 * dim_of(b.src_factors) + j2) =
                        a.m.at(i1, j1) * b.m.at(i2, j2);
    return {a.src_factors + b.src_factors, a.tgt_factors + b.tgt_factors, std::move(k)};
}

DualityData duality_data_with_gauge(const GaussianRational& g) {
    if (g.is_zero())
        throw DomainError("gauge factor must be invertible");
    MatrixMap e{2, 0, Mat<GaussianRational>(1, 4)};
    e.m.at(0, 1) = g;
    e.m.at(0, 2) = -g;
    MatrixMap i{0, 2, Mat<GaussianRational>(4, 1)};
    GaussianRational gi = g.inverse();
    i.m.at(1, 0) = gi;
    i.m.at(2, 0) = -gi;
    return {e, i, i * e};
}

DualityData standard_duality_data() {
    return duality_data_with_gauge(GaussianRational(1));
}

GaussianRational associator_sign(bool twisted) {
    return GaussianRational(twisted ? -1 : 1);
}

MatrixMap rigidity_composition_1(const DualityData& d, bool twisted) {
    MatrixMap id1 = MatrixMap::identity(1);
    MatrixMap assoc = MatrixMap::identity(3).scaled(associator_sign(twisted));
    return tensor_map(d.e, id1) * assoc * tensor_map(id1, d.i);
}

MatrixMap rigidity_composition_2(const DualityData& d, bool twisted) {
    MatrixMap id1 = MatrixMap::identity(1);
    MatrixMap assoc_inv = MatrixMap::identity(3).scaled(associator_sign(twisted));
    return tensor_map(id1, d.e) * assoc_inv * tensor_map(d.i, id1);
}

MatrixMap hexagon_lhs() {
    DualityData d = standard_duality_data();
    MatrixMap id1 = MatrixMap::identity(1);
    MatrixMap assoc = MatrixMap::identity(3).scaled(associator_sign(true));
    return assoc * tensor_map(id1, d.i);
}

MatrixMap hexagon_rhs(const MatrixMap& r) {
    if (r.src_factors != 2 || r.tgt_factors != 2)
        throw DomainError("braiding candidate must act on X @ X");
    DualityData d = standard_duality_data();
    MatrixMap id1 = MatrixMap::identity(1);
    MatrixMap assoc = MatrixMap::identity(3).scaled(associator_sign(true));
    MatrixMap assoc_inv = assoc;  // the sign is its own inverse
    return tensor_map(r, id1) * assoc * tensor_map(id1, r) * assoc_inv * tensor_map(d.i, id1);
}

bool hexagon_check(const MatrixMap& r) {
    return hexagon_rhs(r) == hexagon_lhs();
}

namespace {

// Decomposes m in the span of legs {m1, m2}; throws if it does not lie there.
std::pair<GaussianRational, GaussianRational> in_span(const MatrixMap& m, const MatrixMap& m1,
                                                      const MatrixMap& m2) {
    // find two coordinates where (m1, m2) is invertible
    int n = static_cast<int>(m1.m.a.size());
    for (int p = 0; p < n; ++p)
        for (int q = 0; q < n; ++q) {
            GaussianRational det = m1.m.a[p] * m2.m.a[q] - m1.m.a[q] * m2.m.a[p];
            if (det.is_zero())
                continue;
            GaussianRational alpha = (m.m.a[p] * m2.m.a[q] - m.m.a[q] * m2.m.a[p]) / det;
            GaussianRational beta = (m1.m.a[p] * m.m.a[q] - m1.m.a[q] * m.m.a[p]) / det;
            if (m1.scaled(alpha) + m2.scaled(beta) != m)
                throw DomainError("matrix does not lie in the span of the two legs");
            return {alpha, beta};
        }
    throw DomainError("legs are linearly dependent");
}

}  // namespace

BraidingConstraints braiding_constraint_polynomials() {
    DualityData d = standard_duality_data();
    MatrixMap id1 = MatrixMap::identity(1);
    MatrixMap id2 = MatrixMap::identity(2);

    MatrixMap leg1 = tensor_map(d.i, id1);  // (i @ Id) o l^{-1}
    MatrixMap leg2 = hexagon_lhs();         // A o (Id @ i) o r^{-1}

    // RHS(a,b) = a^2 M(f,f) + ab (M(f,Id) + M(Id,f)) + b^2 M(Id,Id) where
    // M(P,Q) = (P @ Id) A (Id @ Q) A^{-1} (i @ Id)
    MatrixMap assoc = MatrixMap::identity(3).scaled(associator_sign(true));
    auto M = [&](const MatrixMap& p, const MatrixMap& q) {
        return tensor_map(p, id1) * assoc * tensor_map(id1, q) * assoc * tensor_map(d.i, id1);
    };
    MatrixMap m_ff = M(d.f, d.f);
    MatrixMap m_mix = M(d.f, id2) + M(id2, d.f);
    MatrixMap m_ii = M(id2, id2);

    auto [a_ff, b_ff] = in_span(m_ff, leg1, leg2);
    auto [a_mix, b_mix] = in_span(m_mix, leg1, leg2);
    auto [a_ii, b_ii] = in_span(m_ii, leg1, leg2);

    auto rational_of = [](const GaussianRational& g) {
        if (!g.is_rational())
            throw DomainError("constraint coefficients must be rational");
        return g.re;
    };

    BraidingConstraints c;
    // monomial order a^2, ab, b^2, a, b, 1
    c.must_vanish = {rational_of(a_ff), rational_of(a_mix), rational_of(a_ii),
                     Rational(0), Rational(0), Rational(0)};
    c.must_be_one = {rational_of(b_ff), rational_of(b_mix), rational_of(b_ii),
                     Rational(0), Rational(0), Rational(0)};
    return c;
}

std::vector<MatrixMap> braiding_solutions() {
    BraidingConstraints c = braiding_constraint_polynomials();
    // expected shapes: the vanishing constraint is (a+b)^2, the unit one is ab
    std::array<Rational, 6> square = {Rational(1), Rational(2), Rational(1),
                                      Rational(0), Rational(0), Rational(0)};
    std::array<Rational, 6> bilinear = {Rational(0), Rational(1), Rational(0),
                                        Rational(0), Rational(0), Rational(0)};
    if (c.must_vanish != square || c.must_be_one != bilinear)
        throw DomainError("braiding constraints have an unexpected shape");

    // (a+b)^2 = 0 forces b = -a over a field; then ab = 1 gives a^2 = -1.
    DualityData d = standard_duality_data();
    MatrixMap id2 = MatrixMap::identity(2);
    std::vector<MatrixMap> out;
    for (const GaussianRational& a : {GaussianRational::i(), -GaussianRational::i()}) {
        MatrixMap r = d.f.scaled(a) + id2.scaled(-a);
        if (!hexagon_check(r))
            throw DomainError("candidate braiding fails the full matrix equation");
        out.push_back(std::move(r));
    }
    return out;
}

MatrixMap select_braiding(CategoryChoice c) {
    DualityData d = standard_duality_data();
    MatrixMap id2 = MatrixMap::identity(2);
    GaussianRational a = (c == CategoryChoice::O25) ? GaussianRational::i() : -GaussianRational::i();
    return d.f.scaled(a) + id2.scaled(-a);
}

std::vector<GaussianRational> q_from_dimension(const Rational& d) {
    // -q - 1/q = d  <=>  q^2 + d q + 1 = 0
    Rational disc = d * d - Rational(4);
    std::vector<GaussianRational> out;
    Rational root;
    if (!disc.is_negative()) {
        if (!rational_sqrt(disc, root))
            return out;
        out.emplace_back((-d + root) / Rational(2));
        if (!root.is_zero())
            out.emplace_back((-d - root) / Rational(2));
    } else {
        if (!rational_sqrt(-disc, root))
            return out;
        out.emplace_back(-d / Rational(2), root / Rational(2));
        out.emplace_back(-d / Rational(2), -root / Rational(2));
    }
    return out;
}

GaussianRational twist_scalar(int c_label, int r) {
    if (r < 1)
        throw DomainError("label r must be positive");
    Rational t;
    if (c_label == 25)
        t = Rational(-1);
    else if (c_label == 1)
        t = Rational(1);
    else
        throw DomainError("central charge label must be 1 or 25");
    Rational h = h_rs(t, r, 1);
    Rational four_h = Rational(4) * h;
    if (!four_h.is_integer())
        throw DomainError("twist is not in Q(i): 4h is not an integer");
    long m = ((four_h.to_long() % 4) + 4) % 4;  // e^{2 pi i h} = i^{4h}
    switch (m) {
        case 0: return GaussianRational(1);
        case 1: return GaussianRational::i();
        case 2: return GaussianRational(-1);
        default: return -GaussianRational::i();
    }
}

bool monodromy_parity_check(int r, int r_range) {
    if (r < 1 || r_range < 1)
        throw DomainError("labels must be positive");
    Rational t(1);
    Rational hr = h_rs(t, r, 1);
    for (int rp = 1; rp <= r_range; ++rp) {
        Rational hrp = h_rs(t, rp, 1);
        for (const auto& [k, m] : fuse(r, rp).mult) {
            (void)m;
            Rational diff = hr + hrp - h_rs(t, k, 1);
            if (!diff.is_integer())
                return false;
        }
    }
    return true;
}

}  // namespace vircat
