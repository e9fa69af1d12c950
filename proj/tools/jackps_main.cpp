// Command-line front end: compute E / S / U and the closed-form
// evaluations, or run the verification suites.
//
// Exit codes: 0 success, 1 mathematical failure or degenerate input,
// 2 usage error.

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "jackps/verify.hpp"

namespace {

using namespace jackps;

std::vector<int> parse_int_list(const std::string& text)
{
    std::vector<int> out;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty())
            throw InvalidInputError("empty entry in list '" + text + "'");
        std::size_t used = 0;
        const int v = std::stoi(tok, &used);
        if (used != tok.size())
            throw InvalidInputError("bad integer '" + tok + "'");
        out.push_back(v);
    }
    if (out.empty())
        throw InvalidInputError("empty list");
    return out;
}

Composition parse_composition(const std::string& text, int nvars)
{
    std::vector<int> parts = parse_int_list(text);
    if (nvars > 0 && static_cast<int>(parts.size()) != nvars)
        throw InvalidInputError("composition " + text + " does not have " +
                                std::to_string(nvars) + " parts");
    return Composition(std::move(parts));
}

std::set<int> parse_index_set(const std::string& text)
{
    if (text.empty())
        return {};
    const auto v = parse_int_list(text);
    return {v.begin(), v.end()};
}

struct CommonArgs {
    std::string eta;
    std::string eta_star;
    int nvars = 0;
    std::string i_list;
    std::string j_list;
    std::string alpha = "2";
    std::string format = "text";
};

int cmd_e(const CommonArgs& args)
{
    const Composition eta = parse_composition(args.eta, args.nvars);
    const OperatorContext ctx(eta.size(), parse_rational(args.alpha));
    const LaurentPolynomial e = nonsym_jack(eta, ctx);
    if (args.format == "json") {
        nlohmann::json j;
        j["command"] = "e";
        j["eta"] = eta.parts();
        j["n"] = eta.size();
        j["alpha"] = rational_str(ctx.alpha);
        j["E"] = nlohmann::json::parse(polynomial_to_json(e));
        std::cout << j.dump(2) << '\n';
    } else {
        std::cout << "E = " << e.str() << '\n';
    }
    return 0;
}

int cmd_s(const CommonArgs& args)
{
    const Composition es = parse_composition(args.eta_star, args.nvars);
    const SymmetrySpec spec(es.size(), parse_index_set(args.i_list),
                            parse_index_set(args.j_list));
    const OperatorContext ctx(es.size(), parse_rational(args.alpha));
    JackCache cache;
    const PrescribedJack pj = prescribed_jack(es, spec, ctx, cache);
    if (args.format == "json") {
        nlohmann::json j;
        j["command"] = "s";
        j["eta_star"] = es.parts();
        j["n"] = es.size();
        j["i"] = std::vector<int>(spec.i_set().begin(), spec.i_set().end());
        j["j"] = std::vector<int>(spec.j_set().begin(), spec.j_set().end());
        j["alpha"] = rational_str(ctx.alpha);
        j["S"] = nlohmann::json::parse(polynomial_to_json(pj.s_poly));
        j["U"] = nlohmann::json::parse(polynomial_to_json(pj.u_poly));
        j["a"] = rational_str(pj.a_star);
        std::cout << j.dump(2) << '\n';
    } else {
        std::cout << "S = " << pj.s_poly.str() << '\n';
        std::cout << "U = " << pj.u_poly.str() << '\n';
        std::cout << "a = " << rational_str(pj.a_star) << '\n';
    }
    return 0;
}

int cmd_eval(const CommonArgs& args)
{
    const Composition es = parse_composition(args.eta_star, args.nvars);
    const SymmetrySpec spec(es.size(), parse_index_set(args.i_list),
                            parse_index_set(args.j_list));
    const OperatorContext ctx(es.size(), parse_rational(args.alpha));

    const Rat e_ones = closed_form_E_ones(es, es.size(), ctx.alpha);
    const Rat u_main = closed_form_U_ones(es, spec, ctx, UOnesVariant::Main);
    const Rat u_dunkl = closed_form_U_ones(es, spec, ctx, UOnesVariant::Dunkl);
    const Rat cs = c_star(es, spec, ctx);
    const Rat kj = k_j(spec, ctx, KjMode::Formula);
    if (u_main != u_dunkl)
        throw InternalError("U(1^N) closed forms disagree: " +
                            rational_str(u_main) + " vs " +
                            rational_str(u_dunkl));

    if (args.format == "json") {
        nlohmann::json j;
        j["command"] = "eval";
        j["eta_star"] = es.parts();
        j["n"] = es.size();
        j["i"] = std::vector<int>(spec.i_set().begin(), spec.i_set().end());
        j["j"] = std::vector<int>(spec.j_set().begin(), spec.j_set().end());
        j["alpha"] = rational_str(ctx.alpha);
        j["E_ones"] = rational_str(e_ones);
        j["U_ones_main"] = rational_str(u_main);
        j["U_ones_dunkl"] = rational_str(u_dunkl);
        j["c_star"] = rational_str(cs);
        j["k_J"] = rational_str(kj);
        std::cout << j.dump(2) << '\n';
    } else {
        std::cout << "E(1^N) = " << rational_str(e_ones) << '\n';
        std::cout << "U(1^N) main  = " << rational_str(u_main) << '\n';
        std::cout << "U(1^N) dunkl = " << rational_str(u_dunkl) << '\n';
        std::cout << "c* = " << rational_str(cs) << '\n';
        std::cout << "k_J = " << rational_str(kj) << '\n';
    }
    return 0;
}

struct VerifyArgs {
    std::vector<std::string> suites;
    int n = 0;
    int n_max = 3;
    int deg_max = 3;
    std::vector<std::string> alphas;
    std::vector<int> ks;
    int a_max = 1;
    int b_max = 1;
    std::vector<std::string> rs;
    int cutoff = 2;
    std::string eta;
    std::string i_list = "\x01"; // sentinel: unset
    std::string j_list = "\x01";
    std::string format = "text";
};

int cmd_verify(const VerifyArgs& args)
{
    VerifyOptions opt;
    if (args.n > 0) {
        opt.n_min = opt.n_max = args.n;
    } else {
        opt.n_max = args.n_max;
    }
    opt.deg_max = args.deg_max;
    if (!args.alphas.empty()) {
        opt.alphas.clear();
        for (const auto& a : args.alphas)
            opt.alphas.push_back(parse_rational(a));
    }
    if (!args.ks.empty())
        opt.ks = args.ks;
    opt.a_max = args.a_max;
    opt.b_max = args.b_max;
    if (!args.rs.empty()) {
        opt.rs.clear();
        for (const auto& r : args.rs)
            opt.rs.push_back(parse_rational(r));
    }
    opt.cutoff = args.cutoff;
    if (!args.eta.empty()) {
        opt.eta = parse_composition(args.eta, args.n);
        if (args.n == 0) {
            opt.n_min = opt.n_max = opt.eta->size();
        }
    }
    if (args.i_list != "\x01")
        opt.i_set = parse_index_set(args.i_list);
    if (args.j_list != "\x01")
        opt.j_set = parse_index_set(args.j_list);

    std::vector<std::string> selected;
    for (const auto& s : args.suites) {
        std::stringstream ss(s);
        std::string tok;
        while (std::getline(ss, tok, ','))
            if (!tok.empty())
                selected.push_back(tok);
    }
    if (selected.empty() ||
        (selected.size() == 1 && selected.front() == "all"))
        selected = suite_names();

    std::vector<VerificationReport> reports;
    for (const auto& name : selected) {
        const auto batch = run_suite(name, opt);
        reports.insert(reports.end(), batch.begin(), batch.end());
    }

    if (args.format == "json") {
        std::cout << reports_to_json(reports) << '\n';
    } else {
        std::size_t failed = 0;
        for (const auto& r : reports) {
            std::cout << (r.pass ? "[pass] " : "[FAIL] ") << r.id << "  "
                      << r.params << '\n';
            if (!r.pass) {
                std::cout << "       lhs: " << r.lhs << '\n';
                std::cout << "       rhs: " << r.rhs << '\n';
                ++failed;
            }
        }
        std::cout << reports.size() << " instance(s), " << failed
                  << " failure(s)\n";
    }
    return all_pass(reports) ? 0 : 1;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact computer algebra for nonsymmetric Jack polynomials "
                 "and Jack polynomials with prescribed symmetry"};
    app.require_subcommand(1);

    CommonArgs e_args, s_args, eval_args;
    VerifyArgs v_args;

    CLI::App* e_cmd = app.add_subcommand("e", "nonsymmetric Jack E_eta");
    e_cmd->add_option("--eta", e_args.eta, "composition, e.g. 1,0")
        ->required();
    e_cmd->add_option("--n", e_args.nvars, "number of variables");
    e_cmd->add_option("--alpha", e_args.alpha, "rational parameter p/q");
    e_cmd->add_option("--format", e_args.format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));

    CLI::App* s_cmd =
        app.add_subcommand("s", "prescribed-symmetry S, quotient U, and a");
    s_cmd->add_option("--eta-star", s_args.eta_star, "label composition")
        ->required();
    s_cmd->add_option("--n", s_args.nvars, "number of variables");
    s_cmd->add_option("--i", s_args.i_list, "symmetric index set, e.g. 1,2");
    s_cmd->add_option("--j", s_args.j_list, "antisymmetric index set");
    s_cmd->add_option("--alpha", s_args.alpha, "rational parameter p/q");
    s_cmd->add_option("--format", s_args.format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));

    CLI::App* eval_cmd = app.add_subcommand(
        "eval", "closed-form evaluations at z = 1^N");
    eval_cmd->add_option("--eta-star", eval_args.eta_star, "label composition")
        ->required();
    eval_cmd->add_option("--n", eval_args.nvars, "number of variables");
    eval_cmd->add_option("--i", eval_args.i_list, "symmetric index set");
    eval_cmd->add_option("--j", eval_args.j_list, "antisymmetric index set");
    eval_cmd->add_option("--alpha", eval_args.alpha, "rational parameter");
    eval_cmd->add_option("--format", eval_args.format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));

    CLI::App* verify_cmd =
        app.add_subcommand("verify", "run verification suites");
    verify_cmd->add_option("--suite", v_args.suites,
                           "suite name(s), comma separated; default all");
    verify_cmd->add_option("--n", v_args.n, "fixed number of variables");
    verify_cmd->add_option("--n-max", v_args.n_max, "largest N (default 3)");
    verify_cmd->add_option("--deg-max", v_args.deg_max,
                           "largest degree (default 3)");
    verify_cmd->add_option("--alpha", v_args.alphas,
                           "alpha value(s); default 2, 1/2, 5/3");
    verify_cmd->add_option("--k", v_args.ks, "1/alpha value(s) for CT suites");
    verify_cmd->add_option("--a-max", v_args.a_max, "largest a (default 1)");
    verify_cmd->add_option("--b-max", v_args.b_max, "largest b (default 1)");
    verify_cmd->add_option("--r", v_args.rs, "expansion parameter(s)");
    verify_cmd->add_option("--cutoff", v_args.cutoff,
                           "expansion degree cutoff (default 2)");
    verify_cmd->add_option("--eta", v_args.eta, "restrict to one composition");
    verify_cmd->add_option("--i", v_args.i_list, "restrict to one I set");
    verify_cmd->add_option("--j", v_args.j_list, "restrict to one J set");
    verify_cmd->add_option("--format", v_args.format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == static_cast<int>(CLI::ExitCodes::Success)) {
            app.exit(e);
            return 0;
        }
        std::cerr << "usage error: " << e.what() << '\n';
        return 2;
    }

    try {
        if (e_cmd->parsed())
            return cmd_e(e_args);
        if (s_cmd->parsed())
            return cmd_s(s_args);
        if (eval_cmd->parsed())
            return cmd_eval(eval_args);
        if (verify_cmd->parsed())
            return cmd_verify(v_args);
    } catch (const jackps::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
