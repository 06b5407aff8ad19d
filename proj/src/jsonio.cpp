#include "jsonio.hpp"

namespace vircat {

ordered_json to_json(const Rational& r) {
    return r.str();
}

ordered_json to_json(const GaussianRational& g) {
    return ordered_json{{"re", g.re.str()}, {"im", g.im.str()}};
}

ordered_json to_json(const PBWVector& v) {
    ordered_json terms = ordered_json::array();
    for (const auto& [p, c] : v.terms()) {
        ordered_json t;
        t["partition"] = p;
        t["coeff"] = to_json(c);
        terms.push_back(std::move(t));
    }
    return terms;
}

ordered_json to_json(const PuiseuxSeries& s) {
    ordered_json out;
    out["leading_exponent"] = s.leading_exponent().str();
    ordered_json coeffs = ordered_json::array();
    for (const auto& c : s.coefficients())
        coeffs.push_back(c.is_rational() ? ordered_json(c.re.str()) : to_json(c));
    out["coefficients"] = std::move(coeffs);
    out["order"] = s.order();
    return out;
}

ordered_json to_json(const GramMatrix& g) {
    ordered_json out;
    out["level"] = g.level;
    ordered_json basis = ordered_json::array();
    for (const auto& p : g.basis)
        basis.push_back(p);
    out["basis"] = std::move(basis);
    ordered_json rows = ordered_json::array();
    for (int i = 0; i < g.entries.rows; ++i) {
        ordered_json row = ordered_json::array();
        for (int j = 0; j < g.entries.cols; ++j)
            row.push_back(g.entries.at(i, j).str());
        rows.push_back(std::move(row));
    }
    out["entries"] = std::move(rows);
    return out;
}

ordered_json to_json(const FusionVector& f) {
    ordered_json out = ordered_json::object();
    for (const auto& [r, m] : f.mult)
        out[std::to_string(r)] = m;
    return out;
}

ordered_json to_json(const MatrixMap& m) {
    ordered_json out;
    out["source_factors"] = m.src_factors;
    out["target_factors"] = m.tgt_factors;
    ordered_json rows = ordered_json::array();
    for (int i = 0; i < m.m.rows; ++i) {
        ordered_json row = ordered_json::array();
        for (int j = 0; j < m.m.cols; ++j)
            row.push_back(to_json(m.m.at(i, j)));
        rows.push_back(std::move(row));
    }
    out["entries"] = std::move(rows);
    return out;
}

ordered_json to_json(const LinearODE& ode) {
    std::array<Polynomial, 3> p = ode.cleared();
    ordered_json out;
    const char* names[3] = {"phi", "phi'", "phi''"};
    for (int j = 2; j >= 0; --j) {
        ordered_json c;
        c["ascending_coefficients"] = ordered_json::array();
        for (int k = 0; k <= p[j].degree(); ++k)
            c["ascending_coefficients"].push_back(p[j].coeff(k).str());
        c["display"] = p[j].str();
        out[names[j]] = std::move(c);
    }
    return out;
}

ordered_json to_json(const RigidityReport& r) {
    ordered_json out;
    out["c0"] = r.c0.str();
    out["c3"] = r.c3.str();
    out["a"] = r.a.str();
    out["b"] = r.b.str();
    out["R"] = r.rigidity_scalar.str();
    return out;
}

ordered_json to_json(const C3Report& r) {
    ordered_json out;
    out["pairings"] = ordered_json{{"L-3", r.pairing_l3.str()}, {"L-1L-2", r.pairing_l1l2.str()}};
    out["pi3"] = to_json(r.pi3);
    out["c3"] = r.c3.str();
    return out;
}

ordered_json to_json(const TopLevelReport& r) {
    ordered_json out;
    out["r"] = r.r;
    out["candidate_weights"] =
        ordered_json::array({r.candidate_weights.first.str(), r.candidate_weights.second.str()});
    auto pair_json = [](const std::pair<Rational, Rational>& p) {
        return ordered_json::array({p.first.str(), p.second.str()});
    };
    out["eigenvector_coefficients"] =
        ordered_json::array({pair_json(r.eigenvector_coefficients.first),
                             pair_json(r.eigenvector_coefficients.second)});
    return out;
}

ordered_json to_json(const AlgebraSummand& s) {
    ordered_json out;
    out["index"] = s.index;
    out["multiplicity"] = s.multiplicity;
    out["labels"] = s.labels;
    out["lowest_weight"] = s.lowest_weight.str();
    return out;
}

ordered_json module_json(const HWModuleDescriptor& m) {
    ordered_json out;
    out["c"] = m.central_charge.str();
    out["h"] = m.highest_weight.str();
    if (m.quotient)
        out["quotient_level"] = m.quotient->level;
    return out;
}

}  // namespace vircat
