#include "vircat/vircat.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "jsonio.hpp"
#include "suite.hpp"

using namespace vircat;

struct vircat_engine {
    int order = 24;
    std::string last_error;
};

namespace {

char *dup_string(const std::string& s) {
    char *out = static_cast<char *>(std::malloc(s.size() + 1));
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

int emit(vircat_engine *e, char **out_json, const ordered_json& doc) {
    if (out_json)
        *out_json = dup_string(doc.dump());
    e->last_error.clear();
    return VIRCAT_OK;
}

template <class Fn>
int guarded(vircat_engine *e, char **out_json, Fn&& fn) {
    if (!e)
        return VIRCAT_ERR_USAGE;
    if (out_json)
        *out_json = nullptr;
    try {
        return fn();
    } catch (const ParseError& ex) {
        e->last_error = ex.what();
        return VIRCAT_ERR_USAGE;
    } catch (const DomainError& ex) {
        e->last_error = ex.what();
        return VIRCAT_ERR_DOMAIN;
    } catch (const std::exception& ex) {
        e->last_error = ex.what();
        return VIRCAT_ERR_INTERNAL;
    }
}

HWModuleDescriptor module_from(const char *c, const char *h, int quotient_level) {
    if (!c || !h)
        throw ParseError("missing rational argument");
    Rational cr = Rational::parse(c);
    Rational hr = Rational::parse(h);
    if (quotient_level > 0)
        return simple_quotient(cr, hr, quotient_level);
    return verma(cr, hr);
}

int effective_order(const vircat_engine *e, int order) {
    return order < 0 ? e->order : order;
}

}  // namespace

extern "C" {

vircat_engine *vircat_engine_new(void) {
    return new vircat_engine;
}

void vircat_engine_free(vircat_engine *e) {
    delete e;
}

int vircat_engine_set_order(vircat_engine *e, int order) {
    if (!e)
        return VIRCAT_ERR_USAGE;
    if (order < 0) {
        e->last_error = "truncation order must be non-negative";
        return VIRCAT_ERR_USAGE;
    }
    e->order = order;
    return VIRCAT_OK;
}

int vircat_engine_order(const vircat_engine *e) {
    return e ? e->order : -1;
}

const char *vircat_last_error(const vircat_engine *e) {
    return e ? e->last_error.c_str() : "null engine";
}

void vircat_string_free(char *s) {
    std::free(s);
}

const char *vircat_version(void) {
    return "0.1.0";
}

int vircat_central_charge(vircat_engine *e, const char *t, char **out_json) {
    return guarded(e, out_json, [&]() {
        if (!t)
            throw ParseError("missing rational argument");
        ordered_json doc;
        doc["c"] = central_charge_from_t(Rational::parse(t)).str();
        return emit(e, out_json, doc);
    });
}

int vircat_weight(vircat_engine *e, const char *t, long r, long s, char **out_json) {
    return guarded(e, out_json, [&]() {
        if (!t)
            throw ParseError("missing rational argument");
        Rational tr = Rational::parse(t);
        ordered_json doc;
        doc["h"] = h_rs(tr, r, s).str();
        doc["c"] = central_charge_from_t(tr).str();
        return emit(e, out_json, doc);
    });
}

int vircat_gram(vircat_engine *e, const char *c, const char *h, int quotient_level, int level,
                char **out_json) {
    return guarded(e, out_json, [&]() {
        HWModuleDescriptor m = module_from(c, h, quotient_level);
        GramMatrix g = gram_matrix(m, level);
        ordered_json doc = to_json(g);
        doc["module"] = module_json(m);
        doc["determinant"] = determinant(g.entries).str();
        return emit(e, out_json, doc);
    });
}

int vircat_singular(vircat_engine *e, const char *c, const char *h, int level, char **out_json) {
    return guarded(e, out_json, [&]() {
        HWModuleDescriptor m = module_from(c, h, 0);
        std::vector<PBWVector> svs = singular_vector(m, level);
        ordered_json vecs = ordered_json::array();
        ordered_json texts = ordered_json::array();
        for (const auto& v : svs) {
            vecs.push_back(to_json(v));
            texts.push_back(v.str());
        }
        ordered_json doc;
        doc["module"] = module_json(m);
        doc["level"] = level;
        doc["count"] = svs.size();
        doc["vectors"] = std::move(vecs);
        doc["display"] = std::move(texts);
        return emit(e, out_json, doc);
    });
}

int vircat_first_singular_level(vircat_engine *e, const char *c, const char *h, int max_level,
                                char **out_json) {
    return guarded(e, out_json, [&]() {
        HWModuleDescriptor m = module_from(c, h, 0);
        std::optional<int> lvl = first_singular_level(m, max_level);
        ordered_json doc;
        doc["module"] = module_json(m);
        doc["max_level"] = max_level;
        doc["first_singular_level"] = lvl ? ordered_json(*lvl) : ordered_json(nullptr);
        return emit(e, out_json, doc);
    });
}

int vircat_dual_basis(vircat_engine *e, const char *c, const char *h, int quotient_level,
                      int level, char **out_json) {
    return guarded(e, out_json, [&]() {
        HWModuleDescriptor m = module_from(c, h, quotient_level);
        std::vector<PBWVector> db = dual_basis(m, level);
        std::vector<Partition> basis = module_basis(m, level);
        ordered_json doc;
        doc["module"] = module_json(m);
        doc["level"] = level;
        ordered_json items = ordered_json::array();
        for (std::size_t k = 0; k < db.size(); ++k) {
            ordered_json item;
            item["of"] = basis[k];
            item["vector"] = to_json(db[k]);
            item["display"] = db[k].str();
            items.push_back(std::move(item));
        }
        doc["dual_basis"] = std::move(items);
        return emit(e, out_json, doc);
    });
}

int vircat_character(vircat_engine *e, const char *c, const char *h, int quotient_level,
                     int order, char **out_json) {
    return guarded(e, out_json, [&]() {
        HWModuleDescriptor m = module_from(c, h, quotient_level);
        PuiseuxSeries ch = character(m, effective_order(e, order));
        ordered_json doc;
        doc["module"] = module_json(m);
        doc["character"] = to_json(ch);
        return emit(e, out_json, doc);
    });
}

int vircat_fuse(vircat_engine *e, int r, int rp, char **out_json) {
    return guarded(e, out_json, [&]() { return emit(e, out_json, to_json(fuse(r, rp))); });
}

int vircat_induce_w(vircat_engine *e, int r, char **out_json) {
    return guarded(e, out_json, [&]() {
        InduceWResult res = induce_W(r);
        ordered_json doc;
        doc["module"] = algebra_name_str(res.target);
        doc["multiplicity"] = res.multiplicity;
        return emit(e, out_json, doc);
    });
}

int vircat_induce_centralizer(vircat_engine *e, int r, int rp, char **out_json) {
    return guarded(e, out_json,
                   [&]() { return emit(e, out_json, to_json(induce_centralizer(r, rp))); });
}

int vircat_centralizer_fusion(vircat_engine *e, int r, int rp, char **out_json) {
    return guarded(e, out_json,
                   [&]() { return emit(e, out_json, to_json(centralizer_fusion(r, rp))); });
}

int vircat_generic_fusion(vircat_engine *e, int r1, int r1p, int s1, int r2, int r2p, int s2,
                          char **out_json) {
    return guarded(e, out_json, [&]() {
        auto prod = generic_centralizer_fusion(r1, r1p, s1, r2, r2p, s2);
        ordered_json doc = ordered_json::array();
        for (const auto& [triple, m] : prod) {
            ordered_json item;
            item["labels"] = triple;
            item["multiplicity"] = m;
            doc.push_back(std::move(item));
        }
        return emit(e, out_json, doc);
    });
}

int vircat_decompose(vircat_engine *e, const char *algebra, int count, char **out_json) {
    return guarded(e, out_json, [&]() {
        if (!algebra)
            throw ParseError("missing algebra name");
        AlgebraName name = parse_algebra_name(algebra);
        ordered_json doc;
        doc["algebra"] = algebra_name_str(name);
        ordered_json items = ordered_json::array();
        for (const auto& s : decompose_algebra(name, count))
            items.push_back(to_json(s));
        doc["summands"] = std::move(items);
        doc["partial"] = true;
        return emit(e, out_json, doc);
    });
}

int vircat_algebra_character(vircat_engine *e, const char *algebra, const char *weight_floor,
                             int summand_bound, int order, char **out_json) {
    return guarded(e, out_json, [&]() {
        if (!algebra)
            throw ParseError("missing algebra name");
        AlgebraName name = parse_algebra_name(algebra);
        Rational floor = weight_floor ? Rational::parse(weight_floor) : Rational(-1000000);
        ordered_json doc;
        doc["algebra"] = algebra_name_str(name);
        doc["partial_sum"] = true;
        ordered_json items = ordered_json::array();
        for (const auto& sc :
             algebra_character(name, floor, summand_bound, effective_order(e, order))) {
            ordered_json item;
            item["summand"] = to_json(sc.summand);
            item["character"] = to_json(sc.character);
            items.push_back(std::move(item));
        }
        doc["summand_characters"] = std::move(items);
        return emit(e, out_json, doc);
    });
}

int vircat_bpz(vircat_engine *e, int order, char **out_json) {
    return guarded(e, out_json, [&]() {
        int ord = effective_order(e, order);
        LinearODE ode = derive_bpz(Rational(25), Rational(-5, 4), Rational(-5, 4));
        ordered_json doc;
        doc["equation"] = to_json(ode);
        doc["hypergeometric_form"] =
            to_json(substitute_prefactor(ode, Rational(5, 2), Rational(5, 2)));
        auto [lo, hi] = indicial_exponents(ode, 0);
        doc["indicial_exponents"] = ordered_json::array({lo.str(), hi.str()});
        auto [phi1, phi2] = solution_basis(ord);
        doc["phi1"] = to_json(phi1);
        doc["phi2"] = to_json(phi2);
        doc["residuals_vanish"] = verify_solution(ode, phi1).window_is_zero() &&
                                  verify_solution(ode, phi2).window_is_zero();
        return emit(e, out_json, doc);
    });
}

int vircat_rigidity(vircat_engine *e, char **out_json) {
    return guarded(e, out_json, [&]() {
        RigidityReport rep = rigidity_scalar();
        C3Report c3 = c3_report(rep.c0);
        ordered_json doc;
        doc["c0"] = rep.c0.str();
        doc["pairings"] = ordered_json{{"L-3", c3.pairing_l3.str()},
                                       {"L-1L-2", c3.pairing_l1l2.str()}};
        doc["pi3"] = to_json(c3.pi3);
        doc["c3"] = rep.c3.str();
        doc["a"] = rep.a.str();
        doc["b"] = rep.b.str();
        doc["R"] = rep.rigidity_scalar.str();
        return emit(e, out_json, doc);
    });
}

int vircat_braiding(vircat_engine *e, char **out_json) {
    return guarded(e, out_json, [&]() {
        DualityData d = standard_duality_data();
        std::vector<MatrixMap> sols = braiding_solutions();
        BraidingConstraints cons = braiding_constraint_polynomials();
        MatrixMap id2 = MatrixMap::identity(2);

        ordered_json doc;
        ordered_json solutions = ordered_json::array();
        for (const auto& s : sols)
            solutions.push_back(to_json(s));
        doc["solutions"] = std::move(solutions);
        doc["constraints"] = ordered_json::array({"(a+b)^2 = 0", "a*b = 1"});
        ordered_json checks;
        checks["solution_count_is_two"] = sols.size() == 2;
        checks["mutual_inverses"] = (sols[0] * sols[1] == id2);
        checks["hexagon"] = hexagon_check(sols[0]) && hexagon_check(sols[1]);
        checks["rigidity_twisted_identity"] =
            rigidity_composition_1(d, true) == MatrixMap::identity(1) &&
            rigidity_composition_2(d, true) == MatrixMap::identity(1);
        checks["rigidity_untwisted_minus_identity"] =
            rigidity_composition_1(d, false) == MatrixMap::identity(1).scaled(GaussianRational(-1));
        checks["e_after_braiding_O25_is_i_e"] =
            d.e * select_braiding(CategoryChoice::O25) == d.e.scaled(GaussianRational::i());
        checks["e_after_braiding_O1_is_minus_i_e"] =
            d.e * select_braiding(CategoryChoice::O1) == d.e.scaled(-GaussianRational::i());
        checks["intrinsic_dimension_two"] = (d.e * d.i).m.at(0, 0) == GaussianRational(2);
        doc["checks"] = std::move(checks);

        ordered_json qsol = ordered_json::array();
        for (const auto& q : q_from_dimension(Rational(2)))
            qsol.push_back(q.str());
        doc["q_from_dimension_2"] = std::move(qsol);
        return emit(e, out_json, doc);
    });
}

int vircat_twist(vircat_engine *e, int c_label, int r, char **out_json) {
    return guarded(e, out_json, [&]() {
        GaussianRational tw = twist_scalar(c_label, r);
        ordered_json doc;
        doc["twist"] = to_json(tw);
        doc["display"] = tw.str();
        return emit(e, out_json, doc);
    });
}

int vircat_parity_check(vircat_engine *e, int r, int r_range, char **out_json) {
    return guarded(e, out_json, [&]() {
        ordered_json doc;
        doc["r"] = r;
        doc["range"] = r_range;
        doc["integral_monodromy"] = monodromy_parity_check(r, r_range);
        doc["r_is_odd"] = (r % 2 == 1);
        return emit(e, out_json, doc);
    });
}

int vircat_paper_suite(vircat_engine *e, char **out_json) {
    return guarded(e, out_json, [&]() {
        std::vector<SuiteItem> items = run_reference_suite();
        ordered_json doc;
        ordered_json arr = ordered_json::array();
        int failures = 0;
        for (const auto& it : items) {
            ordered_json item;
            item["id"] = it.id;
            item["check"] = it.description;
            item["expected"] = it.expected;
            item["actual"] = it.actual;
            item["pass"] = it.pass;
            if (!it.pass)
                ++failures;
            arr.push_back(std::move(item));
        }
        doc["items"] = std::move(arr);
        doc["total"] = items.size();
        doc["failures"] = failures;
        doc["all_pass"] = failures == 0;
        return emit(e, out_json, doc);
    });
}

}  // extern "C"
