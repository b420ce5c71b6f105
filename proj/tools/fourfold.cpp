// Command-line front end: invariant evaluation, homeomorphism classification,
// blow-down divisibility, SW series, and theorem certificates.
//
// Exit codes: 0 all checks pass, 1 a certificate check failed, 2 usage or
// parse error.

#include <cstdio>
#include <exception>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "fourfold/fourfold.hpp"

namespace {

using fourfold::Int;
using nlohmann::ordered_json;

ordered_json record_to_json(const fourfold::InvariantRecord& r) {
    ordered_json j;
    j["euler"] = r.euler;
    j["signature"] = r.signature;
    j["b2plus"] = r.b2plus;
    j["b2minus"] = r.b2minus;
    j["pi1"] = fourfold::to_string(r.pi1);
    j["spin"] = r.spin;
    j["w2type"] = fourfold::to_string(r.w2type);
    j["definite"] = r.definite;
    return j;
}

void print_record_text(const std::string& expr_text, const fourfold::InvariantRecord& r) {
    std::cout << "manifold:  " << expr_text << "\n"
              << "euler:     " << r.euler << "\n"
              << "signature: " << r.signature << "\n"
              << "b2+ / b2-: " << r.b2plus << " / " << r.b2minus << "\n"
              << "pi1:       " << fourfold::to_string(r.pi1) << "\n"
              << "spin:      " << (r.spin ? "yes" : "no") << "\n"
              << "w2-type:   " << fourfold::to_string(r.w2type) << "\n"
              << "definite:  " << (r.definite ? "yes" : "no") << "\n";
}

int run_eval(const std::string& text, fourfold::ReportFormat format) {
    fourfold::ManifoldExpr expr = fourfold::parse_expr(text);
    fourfold::InvariantRecord rec = fourfold::invariants(expr);
    if (format == fourfold::ReportFormat::json) {
        ordered_json j;
        j["expr"] = fourfold::pretty_print(expr);
        j["invariants"] = record_to_json(rec);
        std::cout << j.dump(2) << "\n";
    } else {
        print_record_text(fourfold::pretty_print(expr), rec);
    }
    return 0;
}

int run_classify(const std::string& a_text, const std::string& b_text,
                 fourfold::ReportFormat format) {
    fourfold::ManifoldExpr a = fourfold::parse_expr(a_text);
    fourfold::ManifoldExpr b = fourfold::parse_expr(b_text);
    fourfold::HomeoVerdict v = fourfold::homeomorphic(a, b);
    if (format == fourfold::ReportFormat::json) {
        ordered_json j;
        j["left"] = fourfold::pretty_print(a);
        j["right"] = fourfold::pretty_print(b);
        j["homeomorphic"] = v.homeomorphic;
        j["reason"] = v.reason;
        j["left_invariants"] = record_to_json(fourfold::invariants(a));
        j["right_invariants"] = record_to_json(fourfold::invariants(b));
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << fourfold::pretty_print(a) << (v.homeomorphic ? "  ~  " : "  !~  ")
                  << fourfold::pretty_print(b) << "\n"
                  << (v.homeomorphic ? "homeomorphic" : "not homeomorphic") << ": " << v.reason
                  << "\n";
    }
    return 0;
}

int run_divisibility(Int n, fourfold::ReportFormat format) {
    fourfold::DnConfiguration dn = fourfold::dn_configuration(n);
    fourfold::SphereConfig combined = dn.combined();
    fourfold::HomClass x = fourfold::dn_wall_witness(dn);
    fourfold::HomClass h = fourfold::h_class(dn.lattice);
    Int divisibility = fourfold::descended_divisibility(dn.canonical_class, combined);
    bool wall = fourfold::check_wall_witness(x, dn.canonical_class, combined, h);
    if (format == fourfold::ReportFormat::json) {
        ordered_json j;
        j["n"] = n;
        j["lattice"] = {{"positive", 1}, {"negative", 9 + 2 * n}};
        j["chain_squares"] = dn.chain1.expected_squares();
        j["divisibility"] = divisibility;
        j["witness"] = {{"square", fourfold::square(x)},
                        {"pairing_with_canonical", fourfold::pairing(x, dn.canonical_class)},
                        {"pairing_with_h", fourfold::pairing(x, h)},
                        {"certifies_wall", wall}};
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "blow-down family member n = " << n << " (lattice (1," << 9 + 2 * n
                  << "))\n";
        std::cout << "chain squares:";
        for (Int s : dn.chain1.expected_squares()) std::cout << " " << s;
        std::cout << "\ndescended divisibility of K: " << divisibility << "\n";
        std::cout << "witness: square " << fourfold::square(x) << ", x.K "
                  << fourfold::pairing(x, dn.canonical_class) << ", x.h "
                  << fourfold::pairing(x, h) << ", wall " << (wall ? "yes" : "no") << "\n";
    }
    return 0;
}

int run_sw(Int n, const std::vector<Int>& twists, fourfold::ReportFormat format) {
    if (n == 1) {
        if (twists.empty()) throw std::invalid_argument("n = 1 needs at least one --twist");
        for (Int t : twists)
            if (t != twists.front())
                throw std::invalid_argument(
                    "the n = 1 values are stated for two surgeries with the same knot");
        Int m = twists.front();
        std::vector<fourfold::BasicClassRecord> vals = fourfold::e1_double_twist_values(m);
        if (format == fourfold::ReportFormat::json) {
            ordered_json arr = ordered_json::array();
            for (const auto& r : vals)
                arr.push_back({{"fiber_multiple", r.fiber_multiple},
                               {"abs_value", r.value},
                               {"note", r.chamber_note}});
            ordered_json j;
            j["n"] = 1;
            j["twist"] = m;
            j["basic_classes"] = std::move(arr);
            std::cout << j.dump(2) << "\n";
        } else {
            std::cout << "double twist-knot surgery on E(1), m = " << m << "\n";
            for (const auto& r : vals)
                std::cout << "  PD(" << (r.fiber_multiple > 0 ? "+" : "") << r.fiber_multiple
                          << "F): |SW| = " << r.value << "  (" << r.chamber_note << ")\n";
        }
        return 0;
    }
    std::vector<fourfold::KnotModel> knots;
    for (Int t : twists) knots.push_back(fourfold::twist_knot(t));
    fourfold::SwSeries series = fourfold::knot_surgery_series(n, knots);
    if (format == fourfold::ReportFormat::json) {
        ordered_json j;
        j["n"] = n;
        j["twists"] = twists;
        j["series"] = series.poly().to_string('u');
        if (!series.poly().is_zero()) {
            j["degree"] = series.degree();
            j["leading_coefficient"] = series.leading_coefficient();
        }
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "SW series of E(" << n << ") with surgeries along";
        if (twists.empty()) std::cout << " no fibers";
        for (Int t : twists) std::cout << " K_" << t;
        std::cout << ":\n  " << series.poly().to_string('u') << "\n";
        if (!series.poly().is_zero())
            std::cout << "  degree " << series.degree() << ", leading coefficient "
                      << series.leading_coefficient() << "\n";
    }
    return 0;
}

int run_theorem(const std::string& id, const std::vector<std::string>& params,
                fourfold::ReportFormat format) {
    std::vector<std::pair<std::string, Int>> overrides;
    for (const std::string& p : params) {
        std::size_t eq = p.find('=');
        if (eq == std::string::npos || eq == 0)
            throw std::invalid_argument("--param expects name=value, got '" + p + "'");
        overrides.emplace_back(p.substr(0, eq), std::stoll(p.substr(eq + 1)));
    }
    fourfold::ScenarioSpec spec = fourfold::make_scenario(id, overrides);
    fourfold::Certificate cert = fourfold::run_scenario(spec);
    std::cout << fourfold::report(cert, format);
    return cert.overall ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact-arithmetic certificates for a family of exotic four-manifolds"};
    app.require_subcommand(1);
    std::string format_name = "text";
    app.add_option("--format", format_name, "output format")
        ->check(CLI::IsMember({"json", "text"}))
        ->capture_default_str();

    std::string eval_text;
    CLI::App* eval = app.add_subcommand("eval", "evaluate the invariants of an expression");
    eval->add_option("expr", eval_text, "manifold expression")->required();

    std::string cls_a, cls_b;
    CLI::App* classify = app.add_subcommand("classify", "decide homeomorphism of two expressions");
    classify->add_option("expr1", cls_a)->required();
    classify->add_option("expr2", cls_b)->required();

    Int div_n = 2;
    CLI::App* divisibility =
        app.add_subcommand("divisibility", "canonical-class divisibility of a blow-down member");
    divisibility->add_option("--n", div_n, "family index (n >= 2)")->required();

    Int sw_n = 2;
    std::vector<Int> sw_twists;
    CLI::App* sw = app.add_subcommand("sw", "Seiberg-Witten bookkeeping for surgered E(n)");
    sw->add_option("--n", sw_n, "elliptic index")->required();
    sw->add_option("--twist", sw_twists, "twist-knot parameter (repeatable)");

    std::string thm_id;
    std::vector<std::string> thm_params;
    CLI::App* theorem = app.add_subcommand("theorem", "run a theorem scenario certificate");
    theorem->add_option("id", thm_id, "scenario id")->required();
    theorem->add_option("--param", thm_params, "override, e.g. --param p=6 (repeatable)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        fourfold::ReportFormat format = fourfold::parse_format(format_name);
        if (*eval) return run_eval(eval_text, format);
        if (*classify) return run_classify(cls_a, cls_b, format);
        if (*divisibility) return run_divisibility(div_n, format);
        if (*sw) return run_sw(sw_n, sw_twists, format);
        if (*theorem) return run_theorem(thm_id, thm_params, format);
    } catch (const fourfold::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
