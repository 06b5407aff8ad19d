#include "fusion.hpp"

namespace vircat {

void FusionVector::add(int r, long m) {
    if (m == 0)
        return;
    auto [it, fresh] = mult.emplace(r, m);
    if (!fresh) {
        it->second += m;
        if (it->second == 0)
            mult.erase(it);
    }
}

FusionVector operator+(FusionVector a, const FusionVector& b) {
    for (const auto& [r, m] : b.mult)
        a.add(r, m);
    return a;
}

std::string FusionVector::str() const {
    std::string out = "{";
    bool first = true;
    for (const auto& [r, m] : mult) {
        if (!first)
            out += ", ";
        out += std::to_string(r) + ": " + std::to_string(m);
        first = false;
    }
    return out + "}";
}

FusionVector fuse(int r, int rp) {
    if (r < 1 || rp < 1)
        throw DomainError("fusion labels must be positive");
    FusionVector v;
    for (int k = std::abs(r - rp) + 1; k <= r + rp - 1; k += 2)
        v.add(k, 1);
    return v;
}

FusionVector fuse(const FusionVector& v, int rp) {
    FusionVector out;
    for (const auto& [r, m] : v.mult) {
        FusionVector f = fuse(r, rp);
        for (const auto& [k, mk] : f.mult)
            out.add(k, m * mk);
    }
    return out;
}

bool fusion_dimension_check(int r, int rp) {
    long total = 0;
    for (const auto& [k, m] : fuse(r, rp).mult)
        total += static_cast<long>(k) * m;
    return total == static_cast<long>(r) * rp;
}

TensorL21Structure tensor_L21_structure(int r) {
    if (r < 1)
        throw DomainError("label r must be positive");
    TensorL21Structure s;
    s.r = r;
    s.resolved = fuse(2, r);
    if (r >= 2) {
        s.sub = "V(" + std::to_string(r + 1) + ",1)/J+";
        s.quot = "V(" + std::to_string(r - 1) + ",1)/J-";
    }
    return s;
}

AlgebraName parse_algebra_name(const std::string& s) {
    if (s == "W(-1)")
        return AlgebraName::WMinusOne;
    if (s == "X")
        return AlgebraName::X;
    if (s == "M(-1)")
        return AlgebraName::MMinusOne;
    if (s == "I(-1)")
        return AlgebraName::IMinusOne;
    if (s == "I_generic")
        return AlgebraName::IGeneric;
    throw ParseError("unknown algebra name: \"" + s + "\"");
}

std::string algebra_name_str(AlgebraName n) {
    switch (n) {
        case AlgebraName::WMinusOne: return "W(-1)";
        case AlgebraName::X: return "X";
        case AlgebraName::MMinusOne: return "M(-1)";
        case AlgebraName::IMinusOne: return "I(-1)";
        case AlgebraName::IGeneric: return "I_generic";
    }
    throw DomainError("invalid algebra name");
}

std::vector<AlgebraSummand> decompose_algebra(AlgebraName name, int count) {
    if (count < 1)
        throw DomainError("summand count must be positive");
    Rational t(-1);
    std::vector<AlgebraSummand> out;
    for (int i = 0; i < count; ++i) {
        AlgebraSummand s;
        switch (name) {
            case AlgebraName::WMinusOne: {
                int n = i;
                s.index = n;
                s.multiplicity = 2 * n + 1;
                s.labels = {2 * n + 1};
                s.lowest_weight = h_rs(t, 2 * n + 1, 1);
                s.quotient_level = 2 * n + 1;
                break;
            }
            case AlgebraName::X: {
                int n = i + 1;
                s.index = n;
                s.multiplicity = 2 * n;
                s.labels = {2 * n};
                s.lowest_weight = h_rs(t, 2 * n, 1);
                s.quotient_level = 2 * n;
                break;
            }
            case AlgebraName::MMinusOne: {
                int n = i;
                s.index = n;
                s.multiplicity = 1;
                s.labels = {2 * n + 1};
                s.lowest_weight = h_rs(t, 2 * n + 1, 1);
                s.quotient_level = 2 * n + 1;
                break;
            }
            case AlgebraName::IMinusOne: {
                int r = i + 1;
                s.index = r;
                s.multiplicity = 1;
                s.labels = {r, r};
                s.lowest_weight = h_rs(Rational(1), r, 1) + h_rs(t, r, 1);  // 1 - r
                s.quotient_level = r;
                break;
            }
            case AlgebraName::IGeneric: {
                int sp = i + 1;
                s.index = sp;
                s.multiplicity = 1;
                s.labels = {sp, sp};
                s.lowest_weight = Rational(1 - sp);  // h_{1,s}(t) + h_{1,s}(-t)
                s.quotient_level = sp;
                break;
            }
        }
        out.push_back(std::move(s));
    }
    return out;
}

InduceWResult induce_W(int r) {
    if (r < 1)
        throw DomainError("label r must be positive");
    InduceWResult res;
    res.target = (r % 2 == 1) ? AlgebraName::WMinusOne : AlgebraName::X;
    res.multiplicity = r;
    return res;
}

FusionVector induce_centralizer(int r, int rp) {
    return fuse(r, rp);
}

FusionVector centralizer_fusion(int r, int rp) {
    return fuse(r, rp);
}

std::map<std::array<int, 3>, long> generic_centralizer_fusion(int r1, int r1p, int s1,
                                                              int r2, int r2p, int s2) {
    FusionVector fr = fuse(r1, r2), frp = fuse(r1p, r2p), fs = fuse(s1, s2);
    std::map<std::array<int, 3>, long> out;
    for (const auto& [k, mk] : fr.mult)
        for (const auto& [kp, mkp] : frp.mult)
            for (const auto& [l, ml] : fs.mult)
                out[{k, kp, l}] += mk * mkp * ml;
    return out;
}

namespace {

using BiFusion = std::map<std::pair<int, int>, long>;

void bi_add(BiFusion& dst, int u, int v, long m) {
    if (m == 0)
        return;
    dst[{u, v}] += m;
}

// sum over s <= cutoff of (s,s).(r,rp) in the bi-fusion ring
BiFusion algebra_times(int r, int rp, int cutoff) {
    BiFusion out;
    for (int s = 1; s <= cutoff; ++s) {
        FusionVector a = fuse(s, r), b = fuse(s, rp);
        for (const auto& [u, mu] : a.mult)
            for (const auto& [v, mv] : b.mult)
                bi_add(out, u, v, mu * mv);
    }
    return out;
}

}  // namespace

bool algebra_fusion_identity_check(int r, int rp, int cutoff) {
    if (cutoff < r + rp)
        throw DomainError("cutoff too small for the requested labels");
    BiFusion lhs = algebra_times(r, rp, cutoff);
    BiFusion rhs;
    for (const auto& [k, mk] : induce_centralizer(r, rp).mult) {
        BiFusion part = algebra_times(k, 1, cutoff);
        for (const auto& [uv, m] : part)
            rhs[uv] += mk * m;
    }
    int stable = cutoff - std::max(r, rp);
    for (int u = 1; u <= stable; ++u)
        for (int v = 1; v <= stable; ++v) {
            auto lit = lhs.find({u, v});
            auto rit = rhs.find({u, v});
            long lm = lit == lhs.end() ? 0 : lit->second;
            long rm = rit == rhs.end() ? 0 : rit->second;
            if (lm != rm)
                return false;
        }
    return true;
}

std::vector<SummandCharacter> algebra_character(AlgebraName name, const Rational& weight_floor,
                                                int summand_bound, int order) {
    if (summand_bound < 1)
        throw DomainError("summand bound must be positive");
    Rational t(-1);
    std::vector<long> pnum = partition_numbers(order);
    // q^h (1 - q^level) / prod (1 - q^n)
    auto quotient_character = [&pnum, order](const Rational& h, int level) {
        std::vector<GaussianRational> c(order + 1);
        for (int n = 0; n <= order; ++n) {
            long dim = pnum[n];
            if (n >= level)
                dim -= pnum[n - level];
            c[n] = GaussianRational(Rational(dim));
        }
        return PuiseuxSeries(h, std::move(c));
    };
    std::vector<SummandCharacter> out;
    for (const AlgebraSummand& s : decompose_algebra(name, summand_bound)) {
        // skip summands whose truncated window lies entirely below the floor
        if (s.lowest_weight + Rational(order) < weight_floor)
            continue;
        PuiseuxSeries ch = PuiseuxSeries::one(order);
        switch (name) {
            case AlgebraName::WMinusOne:
            case AlgebraName::X:
            case AlgebraName::MMinusOne:
                ch = quotient_character(h_rs(t, s.labels[0], 1), s.quotient_level);
                break;
            case AlgebraName::IMinusOne:
                ch = quotient_character(h_rs(Rational(1), s.labels[0], 1), s.quotient_level) *
                     quotient_character(h_rs(t, s.labels[1], 1), s.quotient_level);
                break;
            case AlgebraName::IGeneric:
                // q^{1-s}(1-q^s)^2 / prod (1-q^n)^2, independent of the level
                ch = quotient_character(Rational(0), s.quotient_level) *
                     quotient_character(Rational(1 - s.index), s.quotient_level);
                break;
        }
        out.push_back({s, ch.scaled(GaussianRational(Rational(s.multiplicity))), true});
    }
    return out;
}

}  // namespace vircat
