#include "virasoro.hpp"

#include <algorithm>
#include <numeric>

namespace vircat {

int partition_level(const Partition& p) {
    return std::accumulate(p.begin(), p.end(), 0);
}

int partition_ones(const Partition& p) {
    int n = 0;
    for (auto it = p.rbegin(); it != p.rend() && *it == 1; ++it)
        ++n;
    return n;
}

static void gen_partitions(int n, int max_part, Partition& cur, std::vector<Partition>& out) {
    if (n == 0) {
        out.push_back(cur);
        return;
    }
    for (int p = std::min(n, max_part); p >= 1; --p) {
        cur.push_back(p);
        gen_partitions(n - p, p, cur, out);
        cur.pop_back();
    }
}

std::vector<Partition> partitions_of(int n) {
    std::vector<Partition> out;
    Partition cur;
    gen_partitions(n, n, cur, out);
    return out;
}

bool PartitionOrder::operator()(const Partition& a, const Partition& b) const {
    return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

bool HWModuleDescriptor::same_module(const HWModuleDescriptor& o) const {
    if (central_charge != o.central_charge || highest_weight != o.highest_weight)
        return false;
    if (quotient.has_value() != o.quotient.has_value())
        return false;
    return !quotient || quotient->level == o.quotient->level;
}

HWModuleDescriptor verma(const Rational& c, const Rational& h) {
    return HWModuleDescriptor{c, h, std::nullopt};
}

Rational central_charge_from_t(const Rational& t) {
    if (t.is_zero())
        throw DomainError("central charge parameter t must be non-zero");
    return Rational(13) - Rational(6) * t - Rational(6) / t;
}

Rational h_rs(const Rational& t, long r, long s) {
    if (t.is_zero())
        throw DomainError("weight parameter t must be non-zero");
    Rational rr(r), ss(s);
    return (rr * rr - Rational(1)) / Rational(4) * t - (rr * ss - Rational(1)) / Rational(2) +
           (ss * ss - Rational(1)) / (Rational(4) * t);
}

namespace {

using RTermMap = std::map<Partition, Rational, PartitionOrder>;

Partition with_part(Partition p, int part) {
    auto it = std::lower_bound(p.begin(), p.end(), part, std::greater<int>());
    p.insert(it, part);
    return p;
}

Partition with_merge(const Partition& a, const Partition& b) {
    Partition r = a;
    for (int part : b)
        r = with_part(std::move(r), part);
    return r;
}

Partition drop_smallest(Partition p) {
    p.pop_back();
    return p;
}

void accumulate(RTermMap& dst, const RTermMap& src, const Rational& scale) {
    if (scale.is_zero())
        return;
    for (const auto& [p, c] : src) {
        Rational v = c * scale;
        if (v.is_zero())
            continue;
        auto [it, fresh] = dst.emplace(p, v);
        if (!fresh) {
            it->second += v;
            if (it->second.is_zero())
                dst.erase(it);
        }
    }
}

// L(-m) applied to the monomial of `lam`, normal ordered; m >= 1.
RTermMap lower_mono(int m, const Partition& lam) {
    if (lam.empty() || m <= lam.back())
        return {{with_part(lam, m), Rational(1)}};
    int s = lam.back();
    Partition tail = drop_smallest(lam);
    RTermMap res;
    for (const auto& [mu, c] : lower_mono(m, tail))
        accumulate(res, lower_mono(s, mu), c);
    accumulate(res, lower_mono(m + s, tail), Rational(s - m));
    return res;
}

RTermMap lower_terms(int m, const RTermMap& terms) {
    RTermMap res;
    for (const auto& [p, c] : terms)
        accumulate(res, lower_mono(m, p), c);
    return res;
}

RTermMap raise_mono(int n, const Partition& lam, const Rational& c, const Rational& h);

RTermMap act_mono(int n, const Partition& lam, const Rational& c, const Rational& h) {
    if (n > 0)
        return raise_mono(n, lam, c, h);
    if (n == 0)
        return {{lam, h + Rational(partition_level(lam))}};
    return lower_mono(-n, lam);
}

// L(n) applied to the monomial of `lam` in V(c, h); n >= 1.
RTermMap raise_mono(int n, const Partition& lam, const Rational& c, const Rational& h) {
    if (lam.empty())
        return {};
    int s = lam.back();
    Partition tail = drop_smallest(lam);
    RTermMap res;
    for (const auto& [mu, co] : raise_mono(n, tail, c, h))
        accumulate(res, lower_mono(s, mu), co);
    accumulate(res, act_mono(n - s, tail, c, h), Rational(n + s));
    if (n == s) {
        long nl = n;
        accumulate(res, {{tail, Rational(1)}}, Rational(nl * nl * nl - nl, 12) * c);
    }
    return res;
}

// Applies the monomial word of `p` (largest part first) to a vector.
RTermMap apply_word(const Partition& p, RTermMap v) {
    for (int part : p)
        v = lower_terms(part, v);
    return v;
}

// Rewrites monomials carrying at least `rel.level` parts equal to 1 through
// the quotient relation L(-1)^level v = replacement. Each step strictly
// lowers the maximal number of 1-parts, so the loop terminates.
RTermMap reduce_quotient(RTermMap terms, const QuotientRelation& rel) {
    for (;;) {
        auto it = std::find_if(terms.begin(), terms.end(), [&rel](const auto& kv) {
            return partition_ones(kv.first) >= rel.level;
        });
        if (it == terms.end())
            return terms;
        Partition lam = it->first;
        Rational coeff = it->second;
        terms.erase(it);

        int k = partition_ones(lam);
        Partition rho(lam.begin(), lam.end() - k);  // parts >= 2
        Partition ones_l(static_cast<std::size_t>(rel.level), 1);

        RTermMap repl(rel.replacement.begin(), rel.replacement.end());
        RTermMap val = apply_word(rho, repl);
        // commutator correction: mono(rho + 1^level) - W(rho) mono(1^level)
        accumulate(val, {{with_merge(rho, ones_l), Rational(1)}}, Rational(1));
        accumulate(val, apply_word(rho, {{ones_l, Rational(1)}}), Rational(-1));
        for (int j = 0; j < k - rel.level; ++j)
            val = lower_terms(1, val);
        accumulate(terms, val, coeff);
    }
}

TermMap reduce_quotient_g(const TermMap& terms, const QuotientRelation& rel) {
    TermMap out;
    auto add_term = [&out](const Partition& p, const GaussianRational& c) {
        if (c.is_zero())
            return;
        auto [it, fresh] = out.emplace(p, c);
        if (!fresh)
            it->second += c;
    };
    for (const auto& [p, gc] : terms) {
        if (partition_ones(p) < rel.level) {
            add_term(p, gc);
            continue;
        }
        for (const auto& [q, rc] : reduce_quotient({{p, Rational(1)}}, rel))
            add_term(q, gc * GaussianRational(rc));
    }
    return out;
}

}  // namespace

PBWVector::PBWVector(HWModuleDescriptor m, TermMap terms)
    : module_(std::move(m)), terms_(std::move(terms)) {
    if (module_.quotient)
        terms_ = reduce_quotient_g(terms_, *module_.quotient);
    prune();
}

PBWVector PBWVector::highest_weight_vector(const HWModuleDescriptor& m) {
    return monomial(m, {});
}

PBWVector PBWVector::monomial(const HWModuleDescriptor& m, const Partition& p,
                              const GaussianRational& coeff) {
    TermMap t;
    if (!coeff.is_zero())
        t[p] = coeff;
    return PBWVector(m, std::move(t));
}

GaussianRational PBWVector::coeff(const Partition& p) const {
    auto it = terms_.find(p);
    return it == terms_.end() ? GaussianRational(0) : it->second;
}

void PBWVector::prune() {
    for (auto it = terms_.begin(); it != terms_.end();)
        it = it->second.is_zero() ? terms_.erase(it) : std::next(it);
}

PBWVector PBWVector::operator-() const {
    return scaled(GaussianRational(-1));
}

PBWVector PBWVector::scaled(const GaussianRational& s) const {
    PBWVector r = *this;
    for (auto& [p, c] : r.terms_)
        c *= s;
    r.prune();
    return r;
}

PBWVector operator+(const PBWVector& a, const PBWVector& b) {
    if (!a.module_.same_module(b.module_))
        throw DomainError("PBW vectors from different modules");
    PBWVector r = a;
    for (const auto& [p, c] : b.terms_)
        r.terms_[p] += c;
    r.prune();
    return r;
}

PBWVector operator-(const PBWVector& a, const PBWVector& b) {
    return a + (-b);
}

bool operator==(const PBWVector& a, const PBWVector& b) {
    return a.module_.same_module(b.module_) && a.terms_ == b.terms_;
}

PBWVector PBWVector::graded_component(int n) const {
    PBWVector r;
    r.module_ = module_;
    for (const auto& [p, c] : terms_)
        if (partition_level(p) == n)
            r.terms_[p] = c;
    return r;
}

std::string PBWVector::str() const {
    if (terms_.empty())
        return "0";
    std::string out;
    bool first = true;
    for (const auto& [p, c] : terms_) {
        std::string mono;
        for (auto it = p.rbegin(); it != p.rend(); ++it)
            mono += "L(-" + std::to_string(*it) + ")";
        std::string coeff = c.is_rational() ? c.str() : "(" + c.str() + ")";
        out += first ? "" : " + ";
        out += coeff;
        if (!mono.empty())
            out += "*" + mono;
        out += "*v";
        first = false;
    }
    return out;
}

PBWVector act_mode(int n, const PBWVector& v) {
    const HWModuleDescriptor& m = v.module();
    TermMap out;
    for (const auto& [p, gc] : v.terms()) {
        RTermMap res = act_mono(n, p, m.central_charge, m.highest_weight);
        for (const auto& [q, rc] : res) {
            GaussianRational add = gc * GaussianRational(rc);
            auto [it, fresh] = out.emplace(q, add);
            if (!fresh)
                it->second += add;
        }
    }
    return PBWVector(m, std::move(out));  // constructor applies the quotient rewriting
}

namespace {

// <P_lam v, P_mu v> in the given module; 0 unless levels agree.
Rational gram_entry(const HWModuleDescriptor& m, const Partition& lam, const Partition& mu) {
    if (partition_level(lam) != partition_level(mu))
        return Rational(0);
    PBWVector w = PBWVector::monomial(m, mu);
    for (auto it = lam.rbegin(); it != lam.rend(); ++it)
        w = act_mode(*it, w);
    return w.coeff({}).re;  // basis monomials pair rationally
}

}  // namespace

GaussianRational contravariant_pairing(const PBWVector& u, const PBWVector& w) {
    if (!u.module().same_module(w.module()))
        throw DomainError("pairing of vectors from different modules");
    GaussianRational acc(0);
    for (const auto& [p, cp] : u.terms())
        for (const auto& [q, cq] : w.terms())
            acc += cp * cq * GaussianRational(gram_entry(u.module(), p, q));
    return acc;
}

std::vector<Partition> module_basis(const HWModuleDescriptor& m, int level) {
    std::vector<Partition> all = partitions_of(level);
    if (!m.quotient)
        return all;
    std::vector<Partition> out;
    for (auto& p : all)
        if (partition_ones(p) < m.quotient->level)
            out.push_back(std::move(p));
    return out;
}

GramMatrix gram_matrix(const HWModuleDescriptor& m, int level) {
    if (level < 0)
        throw DomainError("negative level");
    GramMatrix g;
    g.level = level;
    g.basis = module_basis(m, level);
    int n = static_cast<int>(g.basis.size());
    g.entries = Mat<Rational>(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            Rational e = gram_entry(m, g.basis[i], g.basis[j]);
            g.entries.at(i, j) = e;
            g.entries.at(j, i) = e;
        }
    return g;
}

std::vector<PBWVector> singular_vector(const HWModuleDescriptor& m, int level) {
    if (m.quotient)
        throw DomainError("singular vectors are computed in Verma modules");
    if (level < 1)
        throw DomainError("level must be at least 1");
    GramMatrix g = gram_matrix(m, level);
    std::vector<std::vector<Rational>> ker = kernel_basis(g.entries);
    Partition ones(static_cast<std::size_t>(level), 1);
    std::vector<PBWVector> out;
    for (const auto& vec : ker) {
        TermMap terms;
        Rational lead(0);
        for (std::size_t k = 0; k < vec.size(); ++k) {
            if (vec[k].is_zero())
                continue;
            terms[g.basis[k]] = GaussianRational(vec[k]);
            if (g.basis[k] == ones)
                lead = vec[k];
        }
        PBWVector v(m, std::move(terms));
        if (!lead.is_zero())
            v = v.scaled(GaussianRational(lead.inverse()));
        out.push_back(std::move(v));
    }
    return out;
}

std::optional<int> first_singular_level(const HWModuleDescriptor& m, int max_level) {
    if (max_level < 1)
        throw DomainError("max_level must be at least 1");
    for (int lvl = 1; lvl <= max_level; ++lvl) {
        GramMatrix g = gram_matrix(m, lvl);
        if (determinant(g.entries).is_zero())
            return lvl;
    }
    return std::nullopt;
}

std::vector<PBWVector> dual_basis(const HWModuleDescriptor& m, int level) {
    GramMatrix g = gram_matrix(m, level);
    auto inv = inverse(g.entries);
    if (!inv)
        throw DegenerateFormError("contravariant form is degenerate at level " + std::to_string(level));
    std::vector<PBWVector> out;
    int n = static_cast<int>(g.basis.size());
    for (int i = 0; i < n; ++i) {
        TermMap terms;
        for (int j = 0; j < n; ++j)
            if (!inv->at(i, j).is_zero())
                terms[g.basis[j]] = GaussianRational(inv->at(i, j));
        out.emplace_back(m, std::move(terms));
    }
    return out;
}

PuiseuxSeries character(const HWModuleDescriptor& m, int order) {
    if (order < 0)
        throw DomainError("negative series order");
    std::vector<long> p = partition_numbers(order);
    std::vector<GaussianRational> c(order + 1);
    for (int n = 0; n <= order; ++n) {
        long dim = p[n];
        if (m.quotient && n >= m.quotient->level)
            dim -= p[n - m.quotient->level];
        c[n] = GaussianRational(Rational(dim));
    }
    return PuiseuxSeries(m.highest_weight, std::move(c));
}

HWModuleDescriptor simple_quotient(const Rational& c, const Rational& h, int level) {
    std::vector<PBWVector> svs = singular_vector(verma(c, h), level);
    Partition ones(static_cast<std::size_t>(level), 1);
    for (const auto& sv : svs) {
        if (sv.coeff(ones) != GaussianRational(1))
            continue;
        QuotientRelation rel;
        rel.level = level;
        for (const auto& [p, co] : sv.terms()) {
            if (p == ones)
                continue;
            if (!co.is_rational())
                throw DomainError("singular vector with non-rational coefficients");
            rel.replacement[p] = -co.re;
        }
        return HWModuleDescriptor{c, h, std::move(rel)};
    }
    throw DomainError("no singular vector with leading monomial L(-1)^" + std::to_string(level) +
                      " at level " + std::to_string(level));
}

HWModuleDescriptor simple_rs(const Rational& t, int r) {
    if (r < 1)
        throw DomainError("label r must be positive");
    return simple_quotient(central_charge_from_t(t), h_rs(t, r, 1), r);
}

}  // namespace vircat
