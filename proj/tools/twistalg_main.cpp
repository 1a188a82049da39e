#include <cstdint>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "twistalg/checks.hpp"
#include "twistalg/diamond.hpp"
#include "twistalg/lie.hpp"
#include "twistalg/parse.hpp"
#include "twistalg/rewrite.hpp"

using nlohmann::json;
using namespace twistalg;

namespace {

// Exit codes: 0 success/affirmative, 1 negative verdict, 2 parse error,
// 3 parameter error.
constexpr int kExitNegative = 1;
constexpr int kExitParse = 2;
constexpr int kExitParams = 3;

struct GlobalOpts {
    std::string mode = "symbolic";
    std::string m_text, b_text;
    std::string output = "text";
    int max_k = 20;
    int max_deg = 6;
    int max_exp = 6;
    int trials = 1000;
    std::uint64_t seed = 0;
};

TwistParams make_params(const GlobalOpts& opts) {
    if (opts.mode == "symbolic") {
        if (!opts.m_text.empty() || !opts.b_text.empty())
            throw InvalidParameter("--m/--b are only meaningful with --mode concrete");
        return TwistParams::symbolic();
    }
    if (opts.m_text.empty() || opts.b_text.empty())
        throw InvalidParameter("concrete mode needs both --m and --b");
    return TwistParams::concrete(parse_rational(opts.m_text), parse_rational(opts.b_text));
}

json params_json(const TwistParams& p) {
    json j;
    if (p.is_concrete()) {
        j["mode"] = "concrete";
        j["m"] = rational_str(p.m_value());
        j["b"] = rational_str(p.b_value());
    } else {
        j["mode"] = "symbolic";
    }
    return j;
}

void emit(const GlobalOpts& opts, const std::string& command, const TwistParams& params,
          const std::string& input, const json& result, const std::string& text) {
    if (opts.output == "json") {
        json doc;
        doc["command"] = command;
        doc["params"] = params_json(params);
        if (!input.empty()) doc["input"] = input;
        doc["result"] = result;
        std::cout << doc.dump(2) << "\n";
    } else {
        std::cout << text;
    }
}

json check_report_json(const CheckReport& report) {
    json checks = json::array();
    for (const auto& e : report.entries) {
        json c;
        c["name"] = e.name;
        c["params"] = e.params;
        c["pass"] = e.pass;
        if (!e.detail.empty()) c["detail"] = e.detail;
        checks.push_back(c);
    }
    return json{{"all_pass", report.all_pass()}, {"checks", checks}};
}

int run(const GlobalOpts& opts, const std::string& command, const std::string& expr_text) {
    TwistParams params = make_params(opts);
    Rewriter rw(params);

    if (command == "nf") {
        NcPoly p = parse(expr_text).specialized(params);
        NcPoly nf = rw.normal_form(p);
        emit(opts, "nf", params, expr_text, json{{"normal_form", nf.str()}}, nf.str() + "\n");
        return 0;
    }
    if (command == "is-lie" || command == "decompose") {
        NcPoly p = parse(expr_text).specialized(params);
        Decomposition d = decompose(rw, p);
        const bool lie = d.complement_part.is_zero();
        json result{{"is_lie", lie},
                    {"lie_part", d.lie_part.str()},
                    {"complement_part", d.complement_part.str()}};
        std::string text = std::string(lie ? "yes" : "no") + "\nlie_part: " + d.lie_part.str() +
                           "\ncomplement_part: " + d.complement_part.str() + "\n";
        emit(opts, command, params, expr_text, result, text);
        if (command == "is-lie") return lie ? 0 : kExitNegative;
        return 0;
    }
    if (command == "witness") {
        NcPoly p = parse(expr_text).specialized(params);
        LieExpr w = witness(rw, p);
        // Self-check before printing: re-parse and expand the rendered
        // expression, which must reproduce the bracket-generated part.
        NcPoly expanded = rw.normal_form(parse(w.str()).specialized(params));
        if (!(expanded == decompose(rw, p).lie_part))
            throw std::logic_error("witness self-check failed for " + expr_text);
        emit(opts, "witness", params, expr_text,
             json{{"witness", w.str()}, {"expanded", expanded.str()}}, w.str() + "\n");
        return 0;
    }
    if (command == "ambiguities") {
        auto list = enumerate_ambiguities(opts.max_k);
        json items = json::array();
        std::string text;
        for (const Ambiguity& a : list) {
            ResolutionTrace t = resolve(rw, a);
            json item{{"id", a.id()},
                      {"kind", "overlap"},
                      {"k", a.mu.name == RuleName::BCkA ? a.mu.k : (a.nu.name == RuleName::BCkA ? a.nu.k : 0)},
                      {"rules", {a.mu.str(), a.nu.str()}},
                      {"resolvable", true},
                      {"common_nf", t.common.str()}};
            json lhs_steps = json::array(), rhs_steps = json::array();
            for (const auto& s : t.lhs_steps) lhs_steps.push_back(s.str());
            for (const auto& s : t.rhs_steps) rhs_steps.push_back(s.str());
            item["steps_lhs"] = lhs_steps;
            item["steps_rhs"] = rhs_steps;
            items.push_back(item);
            text += a.id() + "  [" + a.mu.str() + " | " + a.nu.str() + "]  resolvable, common nf: " +
                    t.common.str() + "\n";
        }
        text += std::to_string(list.size()) + " overlap ambiguities, 0 inclusion ambiguities\n";
        emit(opts, "ambiguities", params, "",
             json{{"max_k", opts.max_k}, {"count", list.size()}, {"ambiguities", items}}, text);
        return 0;
    }
    if (command == "check") {
        CheckConfig config;
        config.max_exp = opts.max_exp;
        config.ambiguity_max_k = opts.max_k;
        config.resolution_table_max_k = opts.max_k;
        config.confluence_trials = opts.trials;
        config.seed = opts.seed;
        CheckReport report = run_all(rw, config);
        std::string text = report.text();
        text += report.all_pass() ? "all checks passed\n" : "CHECK FAILURES PRESENT\n";
        emit(opts, "check", params, "", check_report_json(report), text);
        return report.all_pass() ? 0 : kExitNegative;
    }
    if (command == "closure") {
        ClosureReport report = lie_closure(rw, opts.max_deg);
        json computed = json::array(), predicted = json::array();
        std::string text = "computed basis (" + std::to_string(report.computed_basis.size()) + "):\n";
        for (const auto& v : report.computed_basis) {
            computed.push_back(v.str());
            text += "  " + v.str() + "\n";
        }
        for (const auto& v : report.predicted_basis) predicted.push_back(v.str());
        text += "predicted basis size: " + std::to_string(report.predicted_basis.size()) + "\n";
        text += std::string("spans_equal: ") + (report.spans_equal ? "yes" : "no") + "\n";
        emit(opts, "closure", params, "",
             json{{"max_degree", report.max_degree},
                  {"spans_equal", report.spans_equal},
                  {"computed_basis", computed},
                  {"predicted_basis", predicted}},
             text);
        return report.spans_equal ? 0 : kExitNegative;
    }
    throw std::logic_error("unhandled command " + command);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact engine for the algebra with defining relation A*B = m*B*A + b*I: "
                 "normal forms, rewrite-system diagnostics, and Lie polynomial decisions"};
    app.require_subcommand(1);

    GlobalOpts opts;
    app.add_option("--mode", opts.mode, "symbolic or concrete")->check(CLI::IsMember({"symbolic", "concrete"}));
    app.add_option("--m", opts.m_text, "value of m in concrete mode (rational, e.g. 2 or 1/2)");
    app.add_option("--b", opts.b_text, "value of b in concrete mode (rational)");
    app.add_option("--output", opts.output, "text or json")->check(CLI::IsMember({"text", "json"}));
    app.add_option("--max-k", opts.max_k, "bound for the BC^kA rule family");
    app.add_option("--max-deg", opts.max_deg, "degree bound for closure");
    app.add_option("--max-exp", opts.max_exp, "exponent bound for identity checks");
    app.add_option("--trials", opts.trials, "random confluence trials");
    app.add_option("--seed", opts.seed, "random seed");
    app.fallthrough();

    std::string expr_text;
    auto* nf = app.add_subcommand("nf", "normal form of an expression");
    nf->add_option("expr", expr_text, "expression")->required();
    auto* islie = app.add_subcommand("is-lie", "decide Lie polynomial membership");
    islie->add_option("expr", expr_text, "expression")->required();
    auto* dec = app.add_subcommand("decompose", "split into bracket-generated and complement parts");
    dec->add_option("expr", expr_text, "expression")->required();
    auto* wit = app.add_subcommand("witness", "bracket expression for a Lie polynomial");
    wit->add_option("expr", expr_text, "expression")->required();
    app.add_subcommand("ambiguities", "enumerate and resolve rule overlaps");
    app.add_subcommand("check", "run the full verification suite");
    app.add_subcommand("closure", "bracket-closure span vs predicted basis");

    CLI11_PARSE(app, argc, argv);
    const std::string command = app.get_subcommands().front()->get_name();

    try {
        return run(opts, command, expr_text);
    } catch (const ParseError& e) {
        std::cerr << e.what() << "\n";
        return kExitParse;
    } catch (const InvalidParameter& e) {
        std::cerr << "parameter error: " << e.what() << "\n";
        return kExitParams;
    } catch (const RootOfUnityParam& e) {
        std::cerr << "parameter error: " << e.what() << "\n";
        return kExitParams;
    } catch (const DenominatorVanishes& e) {
        std::cerr << "parameter error: " << e.what() << "\n";
        return kExitParams;
    } catch (const NotLiePolynomial& e) {
        std::cerr << e.what() << "\n";
        return kExitNegative;
    } catch (const std::invalid_argument& e) {
        std::cerr << "parameter error: " << e.what() << "\n";
        return kExitParams;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    }
}
