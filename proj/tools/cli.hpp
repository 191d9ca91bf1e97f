#pragma once

// Command-line front end: argument handling, text and JSON rendering.
// run_cli() does all the work so tests can drive it without a subprocess.

#include <CLI11.hpp>
#include <json.hpp>

#include <charzeros/cyclopoints.hpp>
#include <charzeros/parser.hpp>
#include <charzeros/principal.hpp>
#include <charzeros/rootsys.hpp>
#include <charzeros/scharacter.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace charzeros::cli {

using Json = nlohmann::ordered_json;

enum ExitCode { kOk = 0, kUsage = 1, kParse = 2, kDomain = 3 };

struct RunConfig {
    std::string subcommand;
    std::string check;  // scheck mode
    std::string type;
    std::vector<std::string> weight;
    std::string expr;
    std::string file;
    std::string builtin;
    std::string format = "text";
    bool verbose = false;
};

inline std::string join(const std::vector<std::int64_t>& v, const char* sep = ", ") {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + std::to_string(v[i]);
    return s;
}

inline std::string q_str(const Rational& q) { return q.get_str(); }

// --- principal / dim ---------------------------------------------------------

inline DominantWeight resolve_weight(const RootSystem& rs, const std::vector<std::string>& args) {
    if (args.size() == 1 && args[0] == "adjoint") {
        DominantWeight w = rs.adjoint_weight();
        if (rs.weyl_dim(w) != rs.adjoint_dimension())
            throw DomainError("adjoint weight does not have the adjoint dimension");
        return w;
    }
    std::vector<std::int64_t> coords;
    for (const auto& a : args) {
        std::stringstream ss(a);
        std::string item;
        while (std::getline(ss, item, ',')) {
            if (item.empty()) continue;
            std::size_t used = 0;
            long long v = 0;
            try {
                v = std::stoll(item, &used);
            } catch (const std::exception&) {
                used = 0;
            }
            if (used != item.size()) throw SyntaxError("bad weight coordinate '" + item + "'", 0);
            coords.push_back(v);
        }
    }
    DominantWeight w(coords);
    rs.check_weight(w);
    return w;
}

inline Json factors_json(const CycloFactorization& f) {
    Json arr = Json::array();
    for (const auto& c : f.factors) arr.push_back({{"index", c.index}, {"multiplicity", c.multiplicity}});
    return arr;
}

inline std::string factors_text(const CycloFactorization& f, char var) {
    std::string s;
    if (f.shift != 0) s = std::string(1, var) + "^" + std::to_string(f.shift);
    for (const auto& c : f.factors) {
        if (!s.empty()) s += " * ";
        s += "Phi_" + std::to_string(c.index) + "(" + var + ")";
        if (c.multiplicity > 1) s += "^" + std::to_string(c.multiplicity);
    }
    return s.empty() ? "1" : s;
}

inline Json principal_report(const RootSystem& rs, const DominantWeight& w) {
    const PrincipalCharacter pc = principal_character(rs, w);
    Json j;
    j["type"] = rs.type().name();
    j["weight"] = w.coords;
    j["dimension"] = to_string(pc.dimension());
    j["epsilon_trivial"] = pc.epsilon_trivial;
    j["chi_t"] = pc.poly_t.to_string('t');
    if (auto u = pc.poly_u()) j["chi_u"] = u->to_string('u');
    if (w.is_zero()) return j;
    const ZeroOrders z = zero_orders(pc);
    j["factors_t"] = factors_json(z.factorization);
    j["shift_t"] = z.factorization.shift;
    if (auto u = pc.poly_u()) {
        const CycloFactorization fu = cyclo_factor(*u);
        j["factors_u"] = factors_json(fu);
        j["shift_u"] = fu.shift;
    }
    const std::int64_t m = explicit_zero_order(pc, rs);
    j["explicit_zero_order"] = m;
    j["explicit_zero_element_order"] = pc.epsilon_trivial ? m / std::gcd(m, std::int64_t{2}) : m;
    const PrimePowerZero pz = prime_power_zero(pc.numerator_exponents, pc.denominator_exponents);
    j["prime_power_zero"] = {{"prime", pz.prime},
                             {"exponent", pz.exponent},
                             {"order", pz.order()},
                             {"element_order", prime_power_element_order(pz, pc.epsilon_trivial)}};
    j["element_orders"] = z.element_orders;
    return j;
}

inline void principal_text(const Json& j, std::ostream& out) {
    out << "type: " << j["type"].get<std::string>() << "\n";
    out << "weight: (" << join(j["weight"].get<std::vector<std::int64_t>>()) << ")\n";
    out << "dimension: " << j["dimension"].get<std::string>() << "\n";
    out << "chi(t) = " << j["chi_t"].get<std::string>() << "\n";
    if (j.contains("chi_u")) out << "chi(u) = " << j["chi_u"].get<std::string>() << "   (u = t^2)\n";
    if (!j.contains("factors_t")) return;
    auto text = [](const Json& arr, std::int64_t shift, char var) {
        CycloFactorization f;
        f.shift = shift;
        for (const auto& c : arr) f.factors.push_back({c["index"].get<std::int64_t>(), c["multiplicity"].get<int>()});
        return factors_text(f, var);
    };
    out << "factors in t: " << text(j["factors_t"], j["shift_t"].get<std::int64_t>(), 't') << "\n";
    if (j.contains("factors_u")) out << "factors in u: " << text(j["factors_u"], j["shift_u"].get<std::int64_t>(), 'u') << "\n";
    out << "explicit zero: t of order " << j["explicit_zero_order"].get<std::int64_t>() << " (element order "
        << j["explicit_zero_element_order"].get<std::int64_t>() << ")\n";
    const Json& pz = j["prime_power_zero"];
    out << "prime-power zero: " << pz["prime"].get<std::int64_t>() << "^" << pz["exponent"].get<int>()
        << " (element order " << pz["element_order"].get<std::int64_t>() << ")\n";
    out << "orders of elements f(t) with chi = 0: " << join(j["element_orders"].get<std::vector<std::int64_t>>()) << "\n";
}

// --- cyclopoints -------------------------------------------------------------

inline std::string couple_text(const CycloPoint& p) {
    if (p.modulus == 1) return "(1, 1)";
    const std::string n = std::to_string(p.modulus);
    auto side = [&](std::int64_t a) { return a == 0 ? std::string("1") : "z_" + n + (a == 1 ? "" : "^" + std::to_string(a)); };
    return "(" + side(p.a) + ", " + side(p.b) + ")";
}

inline Json point_json(const CycloPoint& p) {
    return {{"N", p.modulus},       {"a", p.a},       {"b", p.b},
            {"order_x", p.order_x}, {"order_y", p.order_y}, {"element_order", p.element_order()}};
}

inline Json cyclopoints_report(const BiLaurentPoly& h) {
    const CycloSolveReport r = solve(h);
    Json j;
    j["polynomial"] = h.to_string();
    Json rows = Json::array();
    for (const auto& row : r.rows) {
        Json jr;
        jr["i"] = row.index;
        jr["positive_dimensional"] = row.positive_dimensional;
        jr["x_orders"] = row.x_orders;
        jr["y_orders"] = row.y_orders;
        Json pts = Json::array();
        for (const auto& p : row.points) pts.push_back(point_json(p));
        jr["points"] = pts;
        rows.push_back(jr);
    }
    j["variants"] = rows;
    Json pts = Json::array();
    for (std::size_t k = 0; k < r.points.size(); ++k) {
        Json p = point_json(r.points[k]);
        p["orbit_size"] = r.orbit_sizes[k];
        p["variants"] = r.variant_attribution[k];
        pts.push_back(p);
    }
    j["points"] = pts;
    j["element_orders"] = r.element_orders();
    j["positive_dimensional"] = r.positive_dimensional;
    j["degenerate_curve"] = r.degenerate_curve;
    j["complete"] = r.complete();
    return j;
}

inline void cyclopoints_text(const Json& j, std::ostream& out) {
    out << "H(x, y) = " << j["polynomial"].get<std::string>() << "\n\n";
    auto phis = [](const Json& v) {
        std::string s;
        for (const auto& d : v) s += (s.empty() ? "" : " ") + std::string("Phi_") + std::to_string(d.get<std::int64_t>());
        return s.empty() ? std::string("-") : s;
    };
    std::vector<std::vector<std::string>> table{{"i", "R_i(x)^cycl", "S_i(y)^cycl", "couples", "order of t = (x, y)"}};
    for (const auto& row : j["variants"]) {
        if (row["positive_dimensional"].get<bool>()) {
            table.push_back({std::to_string(row["i"].get<int>()), "positive-dimensional", "(H, H_i share a component)", "", ""});
            continue;
        }
        std::string couples, orders;
        for (const auto& p : row["points"]) {
            CycloPoint cp{p["N"].get<std::int64_t>(), p["a"].get<std::int64_t>(), p["b"].get<std::int64_t>(),
                          p["order_x"].get<std::int64_t>(), p["order_y"].get<std::int64_t>()};
            couples += (couples.empty() ? "" : " ") + couple_text(cp);
            orders += (orders.empty() ? "" : " ") + std::to_string(cp.element_order());
        }
        table.push_back({std::to_string(row["i"].get<int>()), phis(row["x_orders"]), phis(row["y_orders"]),
                         couples.empty() ? "-" : couples, orders.empty() ? "-" : orders});
    }
    std::vector<std::size_t> width(table[0].size(), 0);
    for (const auto& r : table)
        for (std::size_t c = 0; c < r.size(); ++c) width[c] = std::max(width[c], r[c].size());
    for (const auto& r : table) {
        std::string line;
        for (std::size_t c = 0; c < r.size(); ++c) {
            line += r[c];
            if (c + 1 < r.size()) line += std::string(width[c] - r[c].size() + 2, ' ');
        }
        while (!line.empty() && line.back() == ' ') line.pop_back();
        out << line << "\n";
    }
    out << "\nz_N = exp(2 pi i / N); one couple per Galois orbit\n";
    out << "orbits: " << j["points"].size() << "\n";
    out << "orders of zeros: {" << join(j["element_orders"].get<std::vector<std::int64_t>>()) << "}\n";
    if (!j["positive_dimensional"].empty())
        out << "warning: positive-dimensional intersection for i = "
            << join(j["positive_dimensional"].get<std::vector<std::int64_t>>())
            << "; zeros on those components are not enumerated\n";
    if (j["degenerate_curve"].get<bool>())
        out << "warning: H depends on one variable only and vanishes on whole subtori\n";
}

// --- scheck ------------------------------------------------------------------

inline Json witness_json(const PositivityWitness& w) {
    return {{"c_lo", q_str(w.lo)}, {"c_hi", q_str(w.hi)}, {"value_at_c_lo", q_str(w.value_at_lo)}};
}

inline Json finite_json(const FiniteSCheck& r) {
    Json j;
    j["group_order"] = to_string(r.group_order);
    j["is_real"] = r.is_real;
    j["is_positive"] = r.is_positive;
    j["negative_classes"] = r.negative_classes;
    j["mean"] = r.mean ? Json(q_str(*r.mean)) : Json(nullptr);
    j["mean_is_one"] = r.mean_is_one;
    j["is_trivial"] = r.is_trivial;
    j["zero_classes"] = r.zero_classes;
    j["is_s_character"] = r.is_s_character();
    return j;
}

inline std::string read_source(const RunConfig& cfg) {
    if (!cfg.expr.empty()) return cfg.expr;
    std::ifstream in(cfg.file);
    if (!in) throw Error("cannot open " + cfg.file);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline Json scheck_report(const RunConfig& cfg) {
    Json j;
    j["check"] = cfg.check;
    if (cfg.check == "finite") {
        std::istringstream in(read_source(cfg));
        const FiniteClassFunction cf = parse_class_data(in);
        j["classes"] = cf.values.size();
        j["result"] = finite_json(finite_s_check(cf));
        return j;
    }
    const LaurentPoly f = parse_laurent(read_source(cfg), 't');
    j["f"] = f.to_string('t');
    if (cfg.check == "classify") {
        const A0TwoClass c = classify_a0_2(f);
        j["m"] = c.m;
        j["sign"] = c.sign > 0 ? "+" : "-";
        return j;
    }
    const SymmetricLaurent s(f);
    if (cfg.check == "positive") {
        const PositivityResult r = is_positive_on_circle(s);
        j["positive"] = r.positive;
        if (r.witness) j["witness"] = witness_json(*r.witness);
    } else if (cfg.check == "su2") {
        j["mean"] = q_str(su2_mean(s));
        j["n"] = su2_decompose(s);
    }
    return j;
}

inline void scheck_text(const Json& j, std::ostream& out) {
    const std::string check = j["check"].get<std::string>();
    if (check == "finite") {
        const Json& r = j["result"];
        out << "classes: " << j["classes"].get<std::size_t>() << ", group order " << r["group_order"].get<std::string>() << "\n";
        out << "f >= 0: " << (r["is_positive"].get<bool>() ? "yes" : "no");
        if (!r["negative_classes"].empty()) out << " (fails on classes " << join(r["negative_classes"].get<std::vector<std::int64_t>>()) << ")";
        out << "\n<f, 1> = " << (r["mean"].is_null() ? std::string("not rational") : r["mean"].get<std::string>()) << "\n";
        out << "zero classes: ";
        if (r["zero_classes"].empty()) out << "none";
        else out << join(r["zero_classes"].get<std::vector<std::int64_t>>());
        out << "\n";
        if (r["is_s_character"].get<bool>())
            out << (r["is_trivial"].get<bool>() ? "S-character (f = 1)" : "S-character with a zero") << "\n";
        else
            out << "not an S-character\n";
        return;
    }
    out << "f = " << j["f"].get<std::string>() << "\n";
    if (check == "positive") {
        if (j["positive"].get<bool>()) {
            out << "f >= 0 on the unit circle\n";
        } else {
            const Json& w = j["witness"];
            out << "f < 0 for cos(theta) in [" << w["c_lo"].get<std::string>() << ", " << w["c_hi"].get<std::string>()
                << "]; value " << w["value_at_c_lo"].get<std::string>() << " at cos(theta) = " << w["c_lo"].get<std::string>() << "\n";
        }
    } else if (check == "classify") {
        const std::int64_t m = j["m"].get<std::int64_t>();
        const std::string ms = std::to_string(m);
        if (j["sign"].get<std::string>() == "+")
            out << "f = t^-" << ms << " + 2 + t^" << ms << "  (m = " << ms << ", sign +)\n";
        else
            out << "f = -t^-" << ms << " + 2 - t^" << ms << "  (m = " << ms << ", sign -)\n";
    } else if (check == "su2") {
        out << "SU2 mean: " << j["mean"].get<std::string>() << "\n";
        out << "f = g_" << j["n"].get<std::int64_t>() << "^2\n";
    }
}

// --- driver ------------------------------------------------------------------

inline BiLaurentPoly polynomial_source(const RunConfig& cfg) {
    const int sources = !cfg.expr.empty() + !cfg.file.empty() + !cfg.builtin.empty();
    if (sources != 1) throw CLI::ValidationError("exactly one of --expr, --file, --builtin is required");
    if (!cfg.builtin.empty()) return g2_adjoint_poly();
    return parse_bilaurent(read_source(cfg));
}

inline void emit(const Json& j, const RunConfig& cfg, std::ostream& out, void (*text)(const Json&, std::ostream&)) {
    if (cfg.format == "json")
        out << j.dump(2) << "\n";
    else
        text(j, out);
}

inline int execute(const RunConfig& cfg, std::ostream& out) {
    if (cfg.subcommand == "principal" || cfg.subcommand == "dim") {
        const RootSystem rs = RootSystem::build(CartanType::parse(cfg.type));
        const DominantWeight w = resolve_weight(rs, cfg.weight);
        if (cfg.subcommand == "dim") {
            Json j{{"type", rs.type().name()}, {"weight", w.coords}, {"dimension", to_string(rs.weyl_dim(w))}};
            emit(j, cfg, out, [](const Json& j, std::ostream& o) { o << j["dimension"].get<std::string>() << "\n"; });
            return kOk;
        }
        emit(principal_report(rs, w), cfg, out, principal_text);
        if (w.is_zero()) throw NoZeros("the trivial character is 1 and has no zeros");
        return kOk;
    }
    if (cfg.subcommand == "cyclopoints" || cfg.subcommand == "g2-table") {
        RunConfig c = cfg;
        if (cfg.subcommand == "g2-table") {
            if (!cfg.expr.empty() || !cfg.file.empty()) throw CLI::ValidationError("g2-table takes no polynomial");
            c.builtin = "g2-adjoint";
        }
        emit(cyclopoints_report(polynomial_source(c)), c, out, cyclopoints_text);
        return kOk;
    }
    if (cfg.subcommand == "scheck") {
        if (cfg.expr.empty() == cfg.file.empty()) throw CLI::ValidationError("exactly one of --expr, --file is required");
        emit(scheck_report(cfg), cfg, out, scheck_text);
        return kOk;
    }
    throw CLI::ValidationError("no subcommand");
}

inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    RunConfig cfg;
    CLI::App app{"Zeros of characters: principal restrictions, torsion points, S-character checks", "charzeros"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all", "Show help for every subcommand");
    auto add_format = [&cfg](CLI::App* sub) {
        sub->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"text", "json"}));
        sub->add_flag("-v,--verbose", cfg.verbose, "Report timing on stderr");
    };
    for (const char* name : {"principal", "dim"}) {
        auto* sub = app.add_subcommand(name, std::string(name) == "dim" ? "Dimension of an irreducible representation"
                                                                       : "Character restricted to the principal SL2 torus");
        sub->add_option("type,--type", cfg.type, "Cartan type, e.g. G2, A5, E8")->required();
        sub->add_option("--weight", cfg.weight, "Highest weight in fundamental-weight coordinates, or 'adjoint'")
            ->required()
            ->expected(1, -1);
        add_format(sub);
    }
    auto* cp = app.add_subcommand("cyclopoints", "Root-of-unity zeros of a polynomial in x, y");
    cp->add_option("--expr", cfg.expr, "Polynomial text");
    cp->add_option("--file", cfg.file, "File holding the polynomial")->check(CLI::ExistingFile);
    cp->add_option("--builtin", cfg.builtin, "Built-in polynomial")->check(CLI::IsMember({"g2-adjoint"}));
    add_format(cp);
    auto* table = app.add_subcommand("g2-table", "Same as cyclopoints --builtin g2-adjoint");
    add_format(table);
    auto* sc = app.add_subcommand("scheck", "Positivity and S-character checks");
    sc->add_option("check", cfg.check, "positive | classify | su2 | finite")
        ->required()
        ->check(CLI::IsMember({"positive", "classify", "su2", "finite"}));
    sc->add_option("--expr", cfg.expr, "Laurent polynomial in t");
    sc->add_option("--file", cfg.file, "Polynomial or class-data file")->check(CLI::ExistingFile);
    add_format(sc);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? kOk : kUsage;
    }
    cfg.subcommand = app.get_subcommands().front()->get_name();

    const auto start = std::chrono::steady_clock::now();
    int code = kOk;
    try {
        code = execute(cfg, out);
    } catch (const CLI::ValidationError& e) {
        err << "error: " << e.what() << "\n";
        code = kUsage;
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        code = kParse;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << "\n";
        code = kDomain;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        code = kDomain;
    }
    if (cfg.verbose) {
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        err << "elapsed: " << secs << " s\n";
    }
    return code;
}

}  // namespace charzeros::cli
