// Command-line front end for libvircat. Every subcommand prints a single
// JSON document (or a text/latex rendering) wrapping the library output.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <functional>
#include <iostream>
#include <string>

#include "vircat/vircat.h"

using json = nlohmann::ordered_json;

namespace {

struct Options {
    std::string format = "json";
    int order = -1;  // -1: engine default / VIRCAT_ORDER
};

bool looks_like_rational(const std::string& s) {
    if (s.empty())
        return false;
    std::size_t k = (s[0] == '-') ? 1 : 0;
    bool digits = false, slash = false;
    for (; k < s.size(); ++k) {
        if (std::isdigit(static_cast<unsigned char>(s[k]))) {
            digits = true;
        } else if (s[k] == '/' && !slash && digits) {
            slash = true;
            digits = false;
        } else {
            return false;
        }
    }
    return digits;
}

std::string latex_scalar(const std::string& s) {
    auto pos = s.find('/');
    if (pos == std::string::npos || !looks_like_rational(s))
        return s;
    std::string num = s.substr(0, pos), den = s.substr(pos + 1);
    std::string sign;
    if (!num.empty() && num[0] == '-') {
        sign = "-";
        num = num.substr(1);
    }
    return sign + "\\frac{" + num + "}{" + den + "}";
}

bool is_gaussian_object(const json& v) {
    return v.is_object() && v.size() == 2 && v.contains("re") && v.contains("im");
}

std::string gaussian_text(const json& v) {
    std::string re = v["re"].get<std::string>(), im = v["im"].get<std::string>();
    if (im == "0")
        return re;
    if (re == "0")
        return im + "*i";
    return re + " + " + im + "*i";
}

void render_text(const json& v, const std::string& key, int indent, std::ostream& os) {
    std::string pad(indent, ' ');
    std::string label = key.empty() ? "" : key + ": ";
    if (is_gaussian_object(v)) {
        os << pad << label << gaussian_text(v) << "\n";
        return;
    }
    if (v.is_object()) {
        if (!key.empty())
            os << pad << key << ":\n";
        for (const auto& [k, val] : v.items())
            render_text(val, k, indent + (key.empty() ? 0 : 2), os);
        return;
    }
    if (v.is_array()) {
        bool scalar_array = true;
        for (const auto& item : v)
            if (item.is_object() || item.is_array())
                scalar_array = false;
        if (scalar_array) {
            os << pad << label << "[";
            for (std::size_t i = 0; i < v.size(); ++i)
                os << (i ? ", " : "") << (v[i].is_string() ? v[i].get<std::string>() : v[i].dump());
            os << "]\n";
            return;
        }
        os << pad << (key.empty() ? "items" : key) << ":\n";
        for (const auto& item : v)
            render_text(item, "-", indent + 2, os);
        return;
    }
    os << pad << label << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
}

void render_latex(const json& v, const std::string& key, int indent, std::ostream& os) {
    std::string pad(indent, ' ');
    if (v.is_array() && !v.empty() && v[0].is_array()) {
        // matrix
        os << pad << (key.empty() ? "" : key + " = ") << "\\begin{pmatrix}\n";
        for (const auto& row : v) {
            os << pad << "  ";
            for (std::size_t j = 0; j < row.size(); ++j) {
                const json& cell = row[j];
                std::string s = is_gaussian_object(cell) ? gaussian_text(cell)
                                : cell.is_string()       ? cell.get<std::string>()
                                                         : cell.dump();
                os << latex_scalar(s) << (j + 1 < row.size() ? " & " : "");
            }
            os << " \\\\\n";
        }
        os << pad << "\\end{pmatrix}\n";
        return;
    }
    if (is_gaussian_object(v)) {
        os << pad << (key.empty() ? "" : key + " = ") << gaussian_text(v) << "\n";
        return;
    }
    if (v.is_object()) {
        if (!key.empty())
            os << pad << "% " << key << "\n";
        for (const auto& [k, val] : v.items())
            render_latex(val, k, indent + (key.empty() ? 0 : 2), os);
        return;
    }
    if (v.is_array()) {
        os << pad << (key.empty() ? "" : key + " = ") << "[";
        for (std::size_t i = 0; i < v.size(); ++i) {
            std::string s = v[i].is_string() ? v[i].get<std::string>() : v[i].dump();
            os << (i ? ",\\ " : "") << latex_scalar(s);
        }
        os << "]\n";
        return;
    }
    std::string s = v.is_string() ? v.get<std::string>() : v.dump();
    os << pad << (key.empty() ? "" : key + " = ") << latex_scalar(s) << "\n";
}

int print_result(const Options& opt, const std::string& command, const json& inputs, int status,
                 vircat_engine* eng, char* payload) {
    json envelope;
    envelope["command"] = command;
    envelope["inputs"] = inputs;
    if (status == VIRCAT_OK && payload) {
        envelope["output"] = json::parse(payload);
        envelope["status"] = "ok";
    } else {
        envelope["output"] = nullptr;
        envelope["status"] = std::string("error: ") + vircat_last_error(eng);
    }
    if (payload)
        vircat_string_free(payload);

    if (opt.format == "json") {
        std::cout << envelope.dump(2) << "\n";
    } else if (opt.format == "text") {
        render_text(envelope, "", 0, std::cout);
    } else {
        render_latex(envelope, "", 0, std::cout);
    }

    if (status != VIRCAT_OK)
        return status == VIRCAT_ERR_USAGE ? 1 : 2;
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"vircat: exact Virasoro representation and fusion-category calculator"};
    app.require_subcommand(1);
    app.fallthrough(true);

    Options opt;
    app.add_option("--format", opt.format, "Output format")
        ->check(CLI::IsMember({"json", "text", "latex"}))
        ->capture_default_str();
    app.add_option("--order", opt.order, "Series truncation order (default 24)")
        ->check(CLI::NonNegativeNumber)
        ->envname("VIRCAT_ORDER");

    vircat_engine* eng = vircat_engine_new();
    int exit_code = 0;
    auto run = [&](const std::string& command, const json& inputs, int status, char* payload) {
        exit_code = print_result(opt, command, inputs, status, eng, payload);
    };

    // weight
    {
        auto* cmd = app.add_subcommand("weight", "Conformal weight h(r,s) at parameter t");
        auto t = std::make_shared<std::string>();
        auto r = std::make_shared<long>(1);
        auto s = std::make_shared<long>(1);
        cmd->add_option("--t", *t, "Parameter t with c = 13 - 6t - 6/t")->required();
        cmd->add_option("--r", *r, "First label")->required();
        cmd->add_option("--s", *s, "Second label");
        cmd->callback([&, t, r, s]() {
            char* out = nullptr;
            int st = vircat_weight(eng, t->c_str(), *r, *s, &out);
            run("weight", json{{"t", *t}, {"r", *r}, {"s", *s}}, st, out);
        });
    }

    // gram
    {
        auto* cmd = app.add_subcommand("gram", "Contravariant form matrix at a level");
        auto c = std::make_shared<std::string>();
        auto h = std::make_shared<std::string>();
        auto q = std::make_shared<int>(0);
        auto lvl = std::make_shared<int>(0);
        cmd->add_option("--c", *c, "Central charge")->required();
        cmd->add_option("--h", *h, "Highest weight")->required();
        cmd->add_option("--quotient-level", *q, "Quotient by the singular vector at this level");
        cmd->add_option("--level", *lvl, "Level")->required();
        cmd->callback([&, c, h, q, lvl]() {
            char* out = nullptr;
            int st = vircat_gram(eng, c->c_str(), h->c_str(), *q, *lvl, &out);
            run("gram", json{{"c", *c}, {"h", *h}, {"quotient_level", *q}, {"level", *lvl}}, st, out);
        });
    }

    // singular
    {
        auto* cmd = app.add_subcommand("singular", "Singular vectors of a Verma module");
        auto c = std::make_shared<std::string>();
        auto h = std::make_shared<std::string>();
        auto lvl = std::make_shared<int>(0);
        auto scan = std::make_shared<int>(0);
        cmd->add_option("--c", *c, "Central charge")->required();
        cmd->add_option("--h", *h, "Highest weight")->required();
        cmd->add_option("--level", *lvl, "Level");
        cmd->add_option("--scan", *scan, "Report the first degenerate level up to this bound");
        cmd->callback([&, c, h, lvl, scan]() {
            char* out = nullptr;
            int st;
            json inputs{{"c", *c}, {"h", *h}};
            if (*scan > 0) {
                inputs["scan"] = *scan;
                st = vircat_first_singular_level(eng, c->c_str(), h->c_str(), *scan, &out);
            } else {
                inputs["level"] = *lvl;
                st = vircat_singular(eng, c->c_str(), h->c_str(), *lvl, &out);
            }
            run("singular", inputs, st, out);
        });
    }

    // dual-basis
    {
        auto* cmd = app.add_subcommand("dual-basis", "Dual basis under the contravariant form");
        auto c = std::make_shared<std::string>();
        auto h = std::make_shared<std::string>();
        auto q = std::make_shared<int>(0);
        auto lvl = std::make_shared<int>(0);
        cmd->add_option("--c", *c, "Central charge")->required();
        cmd->add_option("--h", *h, "Highest weight")->required();
        cmd->add_option("--quotient-level", *q, "Quotient by the singular vector at this level");
        cmd->add_option("--level", *lvl, "Level")->required();
        cmd->callback([&, c, h, q, lvl]() {
            char* out = nullptr;
            int st = vircat_dual_basis(eng, c->c_str(), h->c_str(), *q, *lvl, &out);
            run("dual-basis", json{{"c", *c}, {"h", *h}, {"quotient_level", *q}, {"level", *lvl}},
                st, out);
        });
    }

    // character
    {
        auto* cmd = app.add_subcommand("character", "Graded dimension series");
        auto c = std::make_shared<std::string>();
        auto h = std::make_shared<std::string>();
        auto q = std::make_shared<int>(0);
        cmd->add_option("--c", *c, "Central charge")->required();
        cmd->add_option("--h", *h, "Highest weight")->required();
        cmd->add_option("--quotient-level", *q, "Quotient by the singular vector at this level");
        cmd->callback([&, c, h, q]() {
            char* out = nullptr;
            int st = vircat_character(eng, c->c_str(), h->c_str(), *q, opt.order, &out);
            run("character", json{{"c", *c}, {"h", *h}, {"quotient_level", *q}}, st, out);
        });
    }

    // fuse
    {
        auto* cmd = app.add_subcommand("fuse", "Product of two simple modules");
        auto r = std::make_shared<int>(1);
        auto rp = std::make_shared<int>(1);
        cmd->add_option("--r", *r, "First label")->required();
        cmd->add_option("--rp", *rp, "Second label")->required();
        cmd->callback([&, r, rp]() {
            char* out = nullptr;
            int st = vircat_fuse(eng, *r, *rp, &out);
            run("fuse", json{{"r", *r}, {"rp", *rp}}, st, out);
        });
    }

    // induce
    {
        auto* cmd = app.add_subcommand("induce", "Induction to an extension algebra");
        auto alg = std::make_shared<std::string>("W(-1)");
        auto r = std::make_shared<int>(1);
        auto rp = std::make_shared<int>(1);
        cmd->add_option("--algebra", *alg, "W(-1) or centralizer")
            ->check(CLI::IsMember({"W(-1)", "centralizer"}));
        cmd->add_option("--r", *r, "Label")->required();
        cmd->add_option("--rp", *rp, "Second label (centralizer only)");
        cmd->callback([&, alg, r, rp]() {
            char* out = nullptr;
            int st;
            json inputs{{"algebra", *alg}, {"r", *r}};
            if (*alg == "centralizer") {
                inputs["rp"] = *rp;
                st = vircat_induce_centralizer(eng, *r, *rp, &out);
            } else {
                st = vircat_induce_w(eng, *r, &out);
            }
            run("induce", inputs, st, out);
        });
    }

    // decompose
    {
        auto* cmd = app.add_subcommand("decompose", "Summands of an extension algebra");
        auto alg = std::make_shared<std::string>();
        auto count = std::make_shared<int>(6);
        auto with_chars = std::make_shared<bool>(false);
        auto floor = std::make_shared<std::string>("-1000000");
        cmd->add_option("--algebra", *alg, "W(-1), X, M(-1), I(-1) or I_generic")->required();
        cmd->add_option("--count", *count, "Number of summands");
        cmd->add_flag("--characters", *with_chars, "Include per-summand characters");
        cmd->add_option("--weight-floor", *floor, "Drop summands entirely below this weight");
        cmd->callback([&, alg, count, with_chars, floor]() {
            char* out = nullptr;
            int st;
            json inputs{{"algebra", *alg}, {"count", *count}};
            if (*with_chars) {
                inputs["weight_floor"] = *floor;
                st = vircat_algebra_character(eng, alg->c_str(), floor->c_str(), *count, opt.order,
                                              &out);
            } else {
                st = vircat_decompose(eng, alg->c_str(), *count, &out);
            }
            run("decompose", inputs, st, out);
        });
    }

    // centralizer-fusion
    {
        auto* cmd = app.add_subcommand("centralizer-fusion", "W_r x W_rp");
        auto r = std::make_shared<int>(1);
        auto rp = std::make_shared<int>(1);
        cmd->add_option("--r", *r, "First label")->required();
        cmd->add_option("--rp", *rp, "Second label")->required();
        cmd->callback([&, r, rp]() {
            char* out = nullptr;
            int st = vircat_centralizer_fusion(eng, *r, *rp, &out);
            run("centralizer-fusion", json{{"r", *r}, {"rp", *rp}}, st, out);
        });
    }

    // generic-fusion
    {
        auto* cmd = app.add_subcommand("generic-fusion", "Triple fusion at generic level");
        auto a = std::make_shared<std::vector<int>>();
        cmd->add_option("--labels", *a, "Six labels r1 r1p s1 r2 r2p s2")
            ->expected(6)
            ->required();
        cmd->callback([&, a]() {
            char* out = nullptr;
            const auto& v = *a;
            int st = vircat_generic_fusion(eng, v[0], v[1], v[2], v[3], v[4], v[5], &out);
            run("generic-fusion", json{{"labels", v}}, st, out);
        });
    }

    // bpz
    {
        auto* cmd = app.add_subcommand("bpz", "Degenerate-field equation and solutions");
        cmd->callback([&]() {
            char* out = nullptr;
            int st = vircat_bpz(eng, opt.order, &out);
            run("bpz", json::object(), st, out);
        });
    }

    // rigidity
    {
        auto* cmd = app.add_subcommand("rigidity", "Rigidity scalar chain");
        cmd->callback([&]() {
            char* out = nullptr;
            int st = vircat_rigidity(eng, &out);
            run("rigidity", json::object(), st, out);
        });
    }

    // braiding
    {
        auto* cmd = app.add_subcommand("braiding", "Braiding solutions with all checks");
        cmd->callback([&]() {
            char* out = nullptr;
            int st = vircat_braiding(eng, &out);
            run("braiding", json::object(), st, out);
        });
    }

    // twist
    {
        auto* cmd = app.add_subcommand("twist", "Ribbon twist scalar");
        auto c = std::make_shared<int>(25);
        auto r = std::make_shared<int>(1);
        cmd->add_option("--c", *c, "Central charge label (1 or 25)")->required();
        cmd->add_option("--r", *r, "Label")->required();
        cmd->callback([&, c, r]() {
            char* out = nullptr;
            int st = vircat_twist(eng, *c, *r, &out);
            run("twist", json{{"c", *c}, {"r", *r}}, st, out);
        });
    }

    // parity-check
    {
        auto* cmd = app.add_subcommand("parity-check", "Integral monodromy parity criterion");
        auto r = std::make_shared<int>(1);
        auto range = std::make_shared<int>(10);
        cmd->add_option("--r", *r, "Label")->required();
        cmd->add_option("--range", *range, "Bound on the partner label");
        cmd->callback([&, r, range]() {
            char* out = nullptr;
            int st = vircat_parity_check(eng, *r, *range, &out);
            run("parity-check", json{{"r", *r}, {"range", *range}}, st, out);
        });
    }

    // paper-suite
    {
        auto* cmd = app.add_subcommand("paper-suite", "Run every published-value check");
        cmd->callback([&]() {
            char* out = nullptr;
            int st = vircat_paper_suite(eng, &out);
            std::string payload = (st == VIRCAT_OK && out) ? out : "";
            run("paper-suite", json::object(), st, out);
            if (st == VIRCAT_OK && exit_code == 0) {
                json doc = json::parse(payload);
                if (!doc["all_pass"].get<bool>())
                    exit_code = 3;
            }
        });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        vircat_engine_free(eng);
        return rc == 0 ? 0 : 1;
    }

    vircat_engine_free(eng);
    return exit_code;
}
