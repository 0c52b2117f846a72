// Command-line front end: expression evaluation against either algebra,
// the paired/act/limit operations, and the verification suite runner.
#include <qmobius/classical.hpp>
#include <qmobius/parse.hpp>
#include <qmobius/sphere.hpp>
#include <qmobius/verify.hpp>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <algorithm>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace {

using namespace qmobius;

struct GlobalOpts {
    std::string format = "text";
    int degree_cap = 8;
};

int emit_result(const GlobalOpts& g, const std::string& command, const std::string& result) {
    if (g.format == "json") {
        nlohmann::ordered_json j;
        j["command"] = command;
        j["result"] = result;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << result << "\n";
    }
    return 0;
}

Algebra algebra_of(const std::string& name) {
    if (name == "funq") return Algebra::Funq;
    if (name == "uq") return Algebra::Uq;
    throw CLI::ValidationError("--alg", "expected 'funq' or 'uq'");
}

std::optional<Su2Limit> su2_by_name(const std::string& name) {
    if (name == "R3") return Su2Limit::R3;
    if (name == "R1+iR2") return Su2Limit::R1_plus_iR2;
    if (name == "-R1+iR2") return Su2Limit::mR1_plus_iR2;
    return std::nullopt;
}

std::optional<AnLimit> an_by_name(const std::string& name) {
    if (name == "T0") return AnLimit::T0;
    if (name == "iT1+T2") return AnLimit::iT1_plus_T2;
    if (name == "iT1-T2") return AnLimit::iT1_minus_T2;
    return std::nullopt;
}

} // namespace

int main(int argc, char** argv) {
    // verify-<scope> aliases for the one
    // verify subcommand
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) {
        std::string a = argv[i];
        if (a.rfind("verify-", 0) == 0) {
            args.push_back("verify");
            args.push_back(a.substr(7));
        } else {
            args.push_back(a);
        }
    }

    CLI::App app{"exact symbolic engine for the q-deformed rotation/Lorentz symmetry "
                 "of the quantum sphere"};
    app.require_subcommand(1);
    GlobalOpts g;
    app.add_option("--format", g.format, "output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    app.add_option("--degree-cap", g.degree_cap, "sphere-expansion degree cap")
        ->capture_default_str();

    std::string expr, alg = "funq", u_expr = "1", f_expr = "1", other, limit_name, scope = "all";
    int arity = 2;
    std::string corrupt_spec;

    auto* nf = app.add_subcommand("nf", "normal form of an expression");
    nf->add_option("expr", expr)->required();
    nf->add_option("--alg", alg, "algebra: funq or uq")->capture_default_str();

    auto* cop = app.add_subcommand("coproduct", "iterated coproduct");
    cop->add_option("expr", expr)->required();
    cop->add_option("--alg", alg)->capture_default_str();
    cop->add_option("--arity", arity, "number of tensor factors")->capture_default_str();

    auto* anti = app.add_subcommand("antipode", "antipode of an expression");
    anti->add_option("expr", expr)->required();
    anti->add_option("--alg", alg)->capture_default_str();

    auto* star = app.add_subcommand("star", "involution of an expression");
    star->add_option("expr", expr)->required();
    star->add_option("--alg", alg)->capture_default_str();

    auto* counit_cmd = app.add_subcommand("counit", "counit of an expression");
    counit_cmd->add_option("expr", expr)->required();
    counit_cmd->add_option("--alg", alg)->capture_default_str();

    auto* pair_cmd = app.add_subcommand("pair", "duality pairing <U, f>");
    pair_cmd->add_option("uexpr", expr, "element of uq")->required();
    pair_cmd->add_option("fexpr", other, "element of funq")->required();

    auto* act = app.add_subcommand("act", "act on a function-algebra element");
    act->add_option("target", expr, "target element of funq")->required();
    act->add_option("--u", u_expr, "uq part of the double element")->capture_default_str();
    act->add_option("--f", f_expr, "funq part of the double element")->capture_default_str();

    auto* podles = app.add_subcommand("podles-check", "right-invariance test");
    podles->add_option("expr", expr)->required();

    auto* expand = app.add_subcommand("expand-sphere", "PBW expansion in A, B, Bs");
    expand->add_option("expr", expr)->required();

    auto* lim_su2 = app.add_subcommand("limit-su2", "classical limit of the rotation action");
    lim_su2->add_option("name", limit_name, "R3, R1+iR2 or -R1+iR2")->required();
    lim_su2->add_option("expr", expr)->required();

    auto* lim_an = app.add_subcommand("limit-an", "classical limit of the dressing action");
    lim_an->add_option("name", limit_name, "T0, iT1+T2 or iT1-T2")->required();
    lim_an->add_option("expr", expr)->required();

    auto* verify = app.add_subcommand("verify", "run the verification suite");
    verify->add_option("scope", scope,
                       "all, relations, hopf, pairing, 13a, 13b, structure, laws, limits, brackets")
        ->capture_default_str();
    verify->add_option("--corrupt-rule", corrupt_spec,
                       "testing fixture: corrupt one rewrite rule, e.g. funq:0");

    for (CLI::App* sub : app.get_subcommands([](CLI::App*) { return true; }))
        sub->fallthrough();

    try {
        std::reverse(args.begin(), args.end());  // CLI11 vector parse wants reversed argv
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        const EngineContext& base = default_context();
        EngineContext local;
        const EngineContext* ctx = &base;
        if (g.degree_cap != base.degree_cap && !verify->parsed()) {
            local = make_context({}, {}, g.degree_cap, true);
            ctx = &local;
        }

        if (verify->parsed()) {
            VerifyOptions opts;
            opts.scope = scope;
            opts.degree_cap = g.degree_cap;
            if (!corrupt_spec.empty()) {
                auto colon = corrupt_spec.find(':');
                if (colon == std::string::npos)
                    throw std::invalid_argument("--corrupt-rule expects <presentation>:<index>");
                opts.corrupt = {{corrupt_spec.substr(0, colon),
                                 std::stoi(corrupt_spec.substr(colon + 1))}};
            }
            VerifyReport report = run_verification_suite(opts);
            std::cout << (g.format == "json" ? report_json(report) : report_text(report));
            return report.all_passed() ? 0 : 1;
        }
        if (nf->parsed()) {
            Element e = parse_element(*ctx, expr, algebra_of(alg));
            return emit_result(g, "nf", e.str());
        }
        if (cop->parsed()) {
            Element e = parse_element(*ctx, expr, algebra_of(alg));
            return emit_result(g, "coproduct", iterated_coproduct(e, arity).str());
        }
        if (anti->parsed()) {
            Element e = parse_element(*ctx, expr, algebra_of(alg));
            return emit_result(g, "antipode", antipode(e).str());
        }
        if (star->parsed()) {
            Element e = parse_element(*ctx, expr, algebra_of(alg));
            return emit_result(g, "star", e.star().str());
        }
        if (counit_cmd->parsed()) {
            Element e = parse_element(*ctx, expr, algebra_of(alg));
            return emit_result(g, "counit", counit(e).str());
        }
        if (pair_cmd->parsed()) {
            Element u = parse_element(*ctx, expr, Algebra::Uq);
            Element f = parse_element(*ctx, other, Algebra::Funq);
            return emit_result(g, "pair", ctx->duality->pair(u, f).str());
        }
        if (act->parsed()) {
            Element h = parse_element(*ctx, expr, Algebra::Funq);
            Element u = parse_element(*ctx, u_expr, Algebra::Uq);
            Element f = parse_element(*ctx, f_expr, Algebra::Funq);
            DoubleElement x = DoubleElement::tensor(*ctx, u, f);
            return emit_result(g, "act", act_double(*ctx, x, h).str());
        }
        if (podles->parsed()) {
            Element e = parse_element(*ctx, expr, Algebra::Funq);
            return emit_result(g, "podles-check", is_podles(*ctx, e) ? "true" : "false");
        }
        if (expand->parsed()) {
            Element e = parse_element(*ctx, expr, Algebra::Funq);
            return emit_result(g, "expand-sphere", express_in_sphere(*ctx, e).str());
        }
        if (lim_su2->parsed()) {
            auto name = su2_by_name(limit_name);
            if (!name) throw std::invalid_argument("unknown generator name '" + limit_name + "'");
            Element h = parse_element(*ctx, expr, Algebra::Funq);
            return emit_result(g, "limit-su2", quantum_limit_su2(*ctx, *name, h).str());
        }
        if (lim_an->parsed()) {
            auto name = an_by_name(limit_name);
            if (!name) throw std::invalid_argument("unknown generator name '" + limit_name + "'");
            Element h = parse_element(*ctx, expr, Algebra::Funq);
            return emit_result(g, "limit-an", quantum_limit_an(*ctx, *name, h).str());
        }
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
