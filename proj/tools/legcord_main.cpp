#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <string>
#include <vector>

#include <unistd.h>

#include "CLI11.hpp"
#include "json.hpp"

#include "legcord/cordial.hpp"
#include "legcord/legraph.hpp"
#include "legcord/numtheory.hpp"
#include "legcord/selfcheck.hpp"
#include "legcord/survey.hpp"

namespace {

using legcord::cordial::CordialVerdict;
using legcord::cordial::Method;
using legcord::numtheory::LegendreValue;
using legcord::numtheory::OddPrime;

// Results are assembled in memory first; error paths never touch stdout.
void deliver(const std::string& payload, const std::string& out_path) {
    if (out_path.empty()) {
        std::fwrite(payload.data(), 1, payload.size(), stdout);
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    out.write(payload.data(), static_cast<std::streamsize>(payload.size()));
    if (!out) {
        throw std::runtime_error("cannot write output file: " + out_path);
    }
}

bool color_allowed(const std::string& out_path) {
    return out_path.empty() && ::isatty(STDOUT_FILENO) == 1 &&
           std::getenv("NO_COLOR") == nullptr;
}

std::string paint(const std::string& text, const char* code, bool enabled) {
    if (!enabled) {
        return text;
    }
    return std::string("\x1b[") + code + "m" + text + "\x1b[0m";
}

std::string bool_word(bool value, bool color) {
    return paint(value ? "true" : "false", value ? "32" : "31", color);
}

LegendreValue parse_edge_symbol(int k) {
    return k == 1 ? LegendreValue::residue : LegendreValue::nonresidue;
}

CordialVerdict run_method(const std::string& method, int n, const OddPrime& p) {
    if (method == "direct") {
        return legcord::cordial::is_cordial_direct(n, p);
    }
    if (method == "theorem") {
        return legcord::cordial::is_cordial_theorem(n, p);
    }
    return legcord::cordial::is_cordial_paper_algorithm(n, p);
}

nlohmann::json verdict_json(const CordialVerdict& verdict) {
    nlohmann::json j;
    j["method"] = std::string(legcord::cordial::method_name(verdict.method));
    j["cordial"] = verdict.cordial;
    if (verdict.s_value) {
        j["s_value"] = *verdict.s_value;
    }
    if (verdict.t_value) {
        j["t_value"] = *verdict.t_value;
    }
    if (verdict.counts) {
        j["counts"] = {{"e0", verdict.counts->e0}, {"e1", verdict.counts->e1}};
    }
    return j;
}

std::string verdict_text(const CordialVerdict& verdict, bool color) {
    std::string out = "method: " + std::string(legcord::cordial::method_name(verdict.method)) + "\n";
    if (verdict.counts) {
        out += "e0: " + std::to_string(verdict.counts->e0) + "\n";
        out += "e1: " + std::to_string(verdict.counts->e1) + "\n";
    }
    if (verdict.s_value) {
        out += "S: " + std::to_string(*verdict.s_value) + "\n";
        out += "T: " + std::to_string(*verdict.t_value) + "\n";
    }
    out += "cordial: " + bool_word(verdict.cordial, color) + "\n";
    return out;
}

struct SymbolArgs {
    std::int64_t a = 0;
    std::int64_t p = 0;
    std::string out_path;
};

struct GraphArgs {
    int n = 0;
    std::int64_t p = 0;
    int k = 1;
    std::string format = "edges";
    std::string out_path;
};

struct CheckArgs {
    int n = 0;
    std::int64_t p = 0;
    std::string method = "theorem";
    std::string format = "text";
    std::string out_path;
};

struct SizeArgs {
    int n = 0;
    std::int64_t p = 0;
    int k = 1;
    bool breakdown = false;
    bool verify = false;
    std::string out_path;
};

struct SurveyArgs {
    int n_min = 0;
    int n_max = 0;
    std::vector<std::int64_t> m_values;
    std::string csv_path;
    std::string svg_path;
    bool with_sets = false;
};

struct VerifyArgs {
    int n_max = 60;
    std::int64_t p_max = 37;
    std::string out_path;
};

int run_symbol(const SymbolArgs& args) {
    const OddPrime p(args.p);
    const int sign = to_int(legcord::numtheory::legendre_symbol(args.a, p));
    deliver(std::to_string(sign) + "\n", args.out_path);
    return 0;
}

int run_graph(const GraphArgs& args) {
    const OddPrime p(args.p);
    const legcord::legraph::LegendreGraph graph(args.n, p, parse_edge_symbol(args.k));
    const std::string payload = args.format == "dot" ? legcord::legraph::to_dot(graph)
                                                     : legcord::legraph::to_edge_list(graph);
    deliver(payload, args.out_path);
    return 0;
}

int run_check(const CheckArgs& args) {
    const OddPrime p(args.p);
    std::vector<CordialVerdict> verdicts;
    if (args.method == "all") {
        verdicts.push_back(legcord::cordial::is_cordial_direct(args.n, p));
        verdicts.push_back(legcord::cordial::is_cordial_theorem(args.n, p));
        verdicts.push_back(legcord::cordial::is_cordial_paper_algorithm(args.n, p));
        for (const CordialVerdict& v : verdicts) {
            if (v.cordial != verdicts.front().cordial) {
                throw std::logic_error("cordiality methods disagree for n=" +
                                       std::to_string(args.n) + " p=" + std::to_string(args.p));
            }
        }
    } else {
        verdicts.push_back(run_method(args.method, args.n, p));
    }
    const bool cordial = verdicts.front().cordial;

    std::string payload;
    if (args.format == "json") {
        nlohmann::json j;
        j["n"] = args.n;
        j["p"] = args.p;
        j["cordial"] = cordial;
        if (args.method == "all") {
            j["method"] = "all";
            j["agreement"] = true;
            nlohmann::json list = nlohmann::json::array();
            for (const CordialVerdict& v : verdicts) {
                list.push_back(verdict_json(v));
            }
            j["verdicts"] = list;
        } else {
            j.update(verdict_json(verdicts.front()));
        }
        payload = j.dump(2) + "\n";
    } else {
        const bool color = color_allowed(args.out_path);
        payload = "n: " + std::to_string(args.n) + "\n";
        payload += "p: " + std::to_string(args.p) + "\n";
        for (const CordialVerdict& v : verdicts) {
            payload += verdict_text(v, color);
        }
        if (args.method == "all") {
            payload += "agreement: " + bool_word(true, color) + "\n";
        }
    }
    deliver(payload, args.out_path);
    return 0;
}

int run_size(const SizeArgs& args) {
    const OddPrime p(args.p);
    const LegendreValue k = parse_edge_symbol(args.k);
    const legcord::legraph::SizeFormulaBreakdown breakdown =
        legcord::legraph::size_closed_form(args.n, p, k);

    std::optional<std::int64_t> enumerated;
    if (args.verify) {
        enumerated = legcord::legraph::LegendreGraph(args.n, p, k).edge_count();
        if (*enumerated != breakdown.size) {
            throw std::logic_error("closed-form size " + std::to_string(breakdown.size) +
                                   " disagrees with enumerated size " +
                                   std::to_string(*enumerated) + " for n=" +
                                   std::to_string(args.n) + " p=" + std::to_string(args.p));
        }
    }

    std::string payload = "n: " + std::to_string(args.n) + "\n";
    payload += "p: " + std::to_string(args.p) + "\n";
    payload += "k: " + std::to_string(args.k) + "\n";
    if (args.breakdown) {
        payload += "q: " + std::to_string(breakdown.q) + "\n";
        payload += "psi: " + std::to_string(breakdown.psi) + "\n";
        payload += "S1: " + std::to_string(breakdown.s1) + "\n";
        payload += "S2: " + std::to_string(breakdown.s2) + "\n";
        payload += "S: " + std::to_string(breakdown.s_total) + "\n";
    }
    payload += "size: " + std::to_string(breakdown.size) + "\n";
    if (enumerated) {
        payload += "enumerated: " + std::to_string(*enumerated) + "\n";
        payload += "match: true\n";
    }
    deliver(payload, args.out_path);
    return 0;
}

int run_survey(const SurveyArgs& args) {
    legcord::survey::SweepOptions options;
    options.with_sets = args.with_sets;
    const legcord::survey::SurveyTable table =
        legcord::survey::sweep(args.n_min, args.n_max, args.m_values, options);

    const std::string csv = legcord::survey::emit_csv(table);
    deliver(csv, args.csv_path);
    if (!args.svg_path.empty()) {
        deliver(legcord::survey::emit_svg_lineplot(table), args.svg_path);
    }
    if (args.with_sets) {
        std::string listing;
        for (const legcord::survey::SurveyCell& cell : table.cells) {
            listing += "J-set n=" + std::to_string(cell.n) + " m=" + std::to_string(cell.m) + ":";
            for (const std::int64_t prime : *cell.j_set) {
                listing += " " + std::to_string(prime);
            }
            listing += "\n";
        }
        std::fwrite(listing.data(), 1, listing.size(), stdout);
    }
    return 0;
}

int run_verify(const VerifyArgs& args) {
    const std::vector<legcord::selfcheck::SuiteResult> results =
        legcord::selfcheck::run_all(args.n_max, args.p_max);
    const bool color = color_allowed(args.out_path);
    std::string payload;
    std::size_t passed = 0;
    for (const legcord::selfcheck::SuiteResult& result : results) {
        if (result.passed) {
            ++passed;
            payload += "[" + paint("PASS", "32", color) + "] " + result.name + " (" +
                       std::to_string(result.cases) + " cases)\n";
        } else {
            payload += "[" + paint("FAIL", "31", color) + "] " + result.name + ": " +
                       result.failure + "\n";
        }
    }
    payload += std::to_string(passed) + "/" + std::to_string(results.size()) +
               " suites passed (n <= " + std::to_string(args.n_max) +
               ", p <= " + std::to_string(args.p_max) + ")\n";
    deliver(payload, args.out_path);
    return passed == results.size() ? 0 : 2;
}

int run_cli(int argc, char** argv) {
    CLI::App app{"Legendre cordiality of complete graphs: deciders, closed-form graph "
                 "quantities, and J(n,m) prime surveys"};
    app.require_subcommand(1);

    SymbolArgs symbol_args;
    CLI::App* symbol_cmd = app.add_subcommand("symbol", "Legendre symbol (a/p)");
    symbol_cmd->add_option("a", symbol_args.a, "integer not divisible by p")->required();
    symbol_cmd->add_option("p", symbol_args.p, "odd prime modulus, at most 1e9")
        ->required()
        ->check(CLI::Range(static_cast<std::int64_t>(3), static_cast<std::int64_t>(1000000000)));
    symbol_cmd->add_option("--out", symbol_args.out_path, "write result to a file");

    GraphArgs graph_args;
    CLI::App* graph_cmd = app.add_subcommand("graph", "export a Legendre graph");
    graph_cmd->add_option("n", graph_args.n, "graph order, 2..5000")
        ->required()
        ->check(CLI::Range(2, 5000));
    graph_cmd->add_option("p", graph_args.p, "odd prime modulus")
        ->required()
        ->check(CLI::Range(static_cast<std::int64_t>(3), static_cast<std::int64_t>(1000000000)));
    graph_cmd->add_option("k", graph_args.k, "edge class: +1 or -1")
        ->required()
        ->check(CLI::IsMember({1, -1}));
    graph_cmd->add_option("--format", graph_args.format, "edges|dot (default edges)")
        ->check(CLI::IsMember({"edges", "dot"}));
    graph_cmd->add_option("--out", graph_args.out_path, "write result to a file");

    CheckArgs check_args;
    CLI::App* check_cmd = app.add_subcommand("check", "decide Legendre cordiality of K_n mod p");
    check_cmd->add_option("n", check_args.n, "graph order, 2..1000000")
        ->required()
        ->check(CLI::Range(2, 1000000));
    check_cmd->add_option("p", check_args.p, "odd prime modulus")
        ->required()
        ->check(CLI::Range(static_cast<std::int64_t>(3), static_cast<std::int64_t>(1000000000)));
    check_cmd
        ->add_option("--method", check_args.method,
                     "direct|theorem|paper-alg|all (default theorem); 'all' asserts agreement")
        ->check(CLI::IsMember({"direct", "theorem", "paper-alg", "all"}));
    check_cmd->add_option("--format", check_args.format, "text|json (default text)")
        ->check(CLI::IsMember({"text", "json"}));
    check_cmd->add_option("--out", check_args.out_path, "write result to a file");

    SizeArgs size_args;
    CLI::App* size_cmd = app.add_subcommand("size", "closed-form Legendre graph size");
    size_cmd->add_option("n", size_args.n, "graph order, 2..1000000")
        ->required()
        ->check(CLI::Range(2, 1000000));
    size_cmd->add_option("p", size_args.p, "odd prime modulus")
        ->required()
        ->check(CLI::Range(static_cast<std::int64_t>(3), static_cast<std::int64_t>(1000000000)));
    size_cmd->add_option("k", size_args.k, "edge class: +1 or -1")
        ->required()
        ->check(CLI::IsMember({1, -1}));
    size_cmd->add_flag("--breakdown", size_args.breakdown, "print q, psi, S1, S2, S");
    size_cmd->add_flag("--verify", size_args.verify,
                       "also enumerate the edges and compare (n <= 5000 recommended)");
    size_cmd->add_option("--out", size_args.out_path, "write result to a file");

    SurveyArgs survey_args;
    CLI::App* survey_cmd = app.add_subcommand("survey", "J(n,m) sweep with CSV/SVG emission");
    survey_cmd->add_option("--n-min", survey_args.n_min, "first order, >= 2")
        ->required()
        ->check(CLI::Range(2, 2000));
    survey_cmd->add_option("--n-max", survey_args.n_max, "last order")
        ->required()
        ->check(CLI::Range(2, 2000));
    survey_cmd
        ->add_option("--m", survey_args.m_values, "comma-separated prime bounds, each 3..50000")
        ->required()
        ->delimiter(',')
        ->check(CLI::Range(static_cast<std::int64_t>(3), static_cast<std::int64_t>(50000)));
    survey_cmd->add_option("--csv", survey_args.csv_path, "write CSV here instead of stdout");
    survey_cmd->add_option("--svg", survey_args.svg_path, "write an SVG line plot here");
    survey_cmd->add_flag("--with-sets", survey_args.with_sets,
                         "also list the qualifying primes per cell on stdout");

    VerifyArgs verify_args;
    CLI::App* verify_cmd =
        app.add_subcommand("verify", "run every formula-vs-enumeration cross-check");
    verify_cmd->add_option("--n-max", verify_args.n_max, "sweep orders up to this (default 60)")
        ->check(CLI::Range(2, 200));
    verify_cmd->add_option("--p-max", verify_args.p_max, "sweep primes up to this (default 37)")
        ->check(CLI::Range(static_cast<std::int64_t>(3), static_cast<std::int64_t>(200)));
    verify_cmd->add_option("--out", verify_args.out_path, "write the report to a file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    if (symbol_cmd->parsed()) {
        return run_symbol(symbol_args);
    }
    if (graph_cmd->parsed()) {
        return run_graph(graph_args);
    }
    if (check_cmd->parsed()) {
        return run_check(check_args);
    }
    if (size_cmd->parsed()) {
        return run_size(size_args);
    }
    if (survey_cmd->parsed()) {
        if (survey_args.n_min > survey_args.n_max) {
            throw std::invalid_argument("--n-min must not exceed --n-max");
        }
        return run_survey(survey_args);
    }
    return run_verify(verify_args);
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run_cli(argc, argv);
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    } catch (const std::domain_error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    } catch (const std::logic_error& e) {
        std::fprintf(stderr, "internal error: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
}
