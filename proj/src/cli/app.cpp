#include "mak/cli/app.hpp"

#include "mak/cli/dot.hpp"
#include "mak/cli/structure_io.hpp"
#include "mak/errors.hpp"
#include "mak/initgen.hpp"
#include "mak/lang/parser.hpp"
#include "mak/plan.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>

#ifndef MAK_DEFAULT_CORPUS
#define MAK_DEFAULT_CORPUS "corpus"
#endif

namespace fs = std::filesystem;

namespace mak::cli {

namespace {

constexpr int exit_internal = 70;

// Carries an exit status out of a command body.
struct Failure {
    int code;
    std::string message;
};

fs::path resolve_input(const std::string& arg)
{
    fs::path p(arg);
    if (fs::exists(p) || p.is_absolute())
        return p;
    std::vector<fs::path> roots;
    if (const char* env = std::getenv("MAK_CORPUS"); env != nullptr && *env != '\0')
        roots.emplace_back(env);
    roots.emplace_back(MAK_DEFAULT_CORPUS);
    for (const auto& r : roots)
        if (fs::exists(r / p))
            return r / p;
    return p;
}

std::string read_file(const std::string& arg)
{
    const fs::path p = resolve_input(arg);
    std::ifstream in(p, std::ios::binary);
    if (!in)
        throw Failure{exit_no_input, "cannot open '" + arg + "'"};
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

lang::Domain load_domain(const std::string& file)
{
    const std::string text = read_file(file);
    try {
        return lang::parse_domain(text);
    } catch (const ParseError& e) {
        throw Failure{exit_data, file + ": " + e.what()};
    } catch (const DeclarationError& e) {
        throw Failure{exit_data, file + ": " + e.what()};
    }
}

lang::GroundDomain compile_domain(const lang::Domain& d, const std::string& file)
{
    try {
        return lang::compile(d);
    } catch (const ArgumentError& e) {
        throw Failure{exit_data, file + ": " + e.what()};
    }
}

StructureDocument load_structure(const std::string& file)
{
    const std::string text = read_file(file);
    try {
        return read_structure(text);
    } catch (const ParseError& e) {
        throw Failure{exit_data, file + ": " + e.what()};
    }
}

struct ModelSource {
    std::string model_file;
    bool generate = false;
    std::size_t states = 2;
};

PointedStructure initial_model(const lang::GroundDomain& d, const ModelSource& src)
{
    if (!src.model_file.empty()) {
        StructureDocument doc = load_structure(src.model_file);
        if (!(doc.structure.signature() == *d.signature))
            throw Failure{exit_data, src.model_file + ": agents or fluents differ from the domain's"};
        if (!doc.real)
            throw Failure{exit_data, src.model_file + ": no real state"};
        return doc.pointed();
    }
    GenConfig cfg;
    cfg.max_states = src.states;
    ExplicitGenerator gen(d, cfg);
    auto p = gen.next();
    if (!p)
        throw Failure{exit_data, "no initial model with at most " + std::to_string(src.states) + " states"};
    return std::move(*p);
}

Formula parse_goal(const std::string& text, const Signature& sig)
{
    try {
        Formula f = lang::parse_formula(text);
        check_declared(f, sig);
        return f;
    } catch (const ParseError& e) {
        throw Failure{exit_usage, std::string("goal: ") + e.what()};
    } catch (const DeclarationError& e) {
        throw Failure{exit_usage, std::string("goal: ") + e.what()};
    }
}

std::string describe_state(const KripkeStructure& m, std::size_t s, const lang::UniverseSpec& u)
{
    std::string out;
    const Signature& sig = m.signature();
    for (const auto& v : u.variables)
        for (std::size_t f = 0; f < sig.fluent_count(); ++f) {
            const FluentAtom& atom = sig.fluents()[f];
            if (m.value(s, f) && atom.functor == v.name && atom.args.size() == 1)
                out += (out.empty() ? "" : " ") + v.name + "=" + atom.args[0].to_string();
        }
    return out;
}

int run_puzzle(const lang::Domain& d, std::ostream& out)
{
    if (d.universe.variables.empty())
        throw Failure{exit_data, "the domain declares no universe"};
    KripkeStructure m0 = [&] {
        try {
            return generate_partition(d.agents, d.universe);
        } catch (const ArgumentError& e) {
            throw Failure{exit_data, e.what()};
        }
    }();
    out << "initial states: " << m0.size() << "\n";
    std::vector<std::size_t> sizes;
    KripkeStructure last = announcement_chain(m0, d.universe.announcements, &sizes);
    for (std::size_t i = 0; i < sizes.size(); ++i)
        out << "after announcement " << i + 1 << ": " << sizes[i] << "\n";
    if (last.empty())
        out << "no solution\n";
    for (std::size_t s = 0; s < last.size(); ++s)
        out << describe_state(last, s, d.universe) << "\n";
    return 0;
}

} // namespace

lang::Domain sum_product_domain(long max)
{
    using lang::Expr;
    lang::Domain d;
    d.agents = {"s", "p"};
    auto x = Expr::variable("x");
    auto y = Expr::variable("y");
    d.universe.variables = {{"x", 2, max}, {"y", 2, max}};
    d.universe.constraints = {Expr::binary(Expr::Op::lt, x, y),
                              Expr::binary(Expr::Op::le, Expr::binary(Expr::Op::add, x, y), Expr::constant(max))};
    d.universe.observations = {{"s", Expr::binary(Expr::Op::add, x, y)}, {"p", Expr::binary(Expr::Op::mul, x, y)}};
    auto knows_both = [](const char* agent) {
        return Formula::conjunction(Formula::knows_value(agent, "x"), Formula::knows_value(agent, "y"));
    };
    d.universe.announcements = {
        Formula::knows("s", Formula::negation(knows_both("p"))),  // s: I knew p did not know
        knows_both("p"),                                          // p: now I know
        knows_both("s"),                                          // s: now I know too
    };
    return d;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Kripke models of multi-agent knowledge: queries, planning, model generation"};
    app.name("mak");
    app.require_subcommand(1);

    std::string domain_file;
    std::string query_text;
    ModelSource source;

    auto add_model_options = [&](CLI::App* sub) {
        auto* model = sub->add_option("--model", source.model_file, "Initial pointed structure (.mks)");
        auto* gen = sub->add_flag("--gen", source.generate, "Generate the initial structure from the init axioms");
        sub->add_option("--states", source.states, "State bound for --gen")->check(CLI::Range(1, 8));
        model->excludes(gen);
    };

    auto* check = app.add_subcommand("check", "Evaluate `goal after [a1; ...]` on the initial structure");
    check->add_option("domain", domain_file, "Domain file (.mad)")->required();
    check->add_option("query", query_text, "Query")->required();
    add_model_options(check);

    std::string goal_text;
    std::size_t max_len = 3;
    std::string strategy = "dfs";
    bool single_pass = false;
    auto* plan = app.add_subcommand("plan", "Search for an action sequence reaching a goal");
    plan->add_option("domain", domain_file, "Domain file (.mad)")->required();
    plan->add_option("--goal", goal_text, "Goal formula")->required();
    plan->add_option("--max-len", max_len, "Maximal plan length");
    plan->add_option("--strategy", strategy, "dfs or bfs")->check(CLI::IsMember({"dfs", "bfs"}));
    plan->add_flag("--single-pass", single_pass, "dfs: one depth-first pass instead of iterative deepening");
    add_model_options(plan);

    std::size_t init_states = 2;
    std::size_t init_count = 1;
    std::string out_dir;
    auto* init = app.add_subcommand("init", "Generate initial pointed structures");
    init->add_option("domain", domain_file, "Domain file (.mad)")->required();
    init->add_option("--states", init_states, "Maximal number of states (1..8)")->check(CLI::Range(1, 8));
    init->add_option("--count", init_count, "Number of structures to produce (0 = all)");
    init->add_option("--out", out_dir, "Directory for model_<k>.mks files (default: standard output)");

    std::string puzzle_name;
    long puzzle_max = 100;
    auto* puzzle = app.add_subcommand("puzzle", "Run a knowledge puzzle: `sumproduct` or a .mad file with a universe");
    puzzle->add_option("name", puzzle_name, "sumproduct or a domain file")->required();
    auto* max_opt = puzzle->add_option("--max", puzzle_max, "sumproduct: bound on x + y")->check(CLI::Range(5L, 100000L));

    std::string structure_file;
    auto* dot = app.add_subcommand("export-dot", "Print a structure file as a graphviz digraph");
    dot->add_option("structure", structure_file, "Structure file (.mks)")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : exit_usage;
    }

    try {
        if (check->parsed()) {
            const lang::Domain d = load_domain(domain_file);
            const lang::GroundDomain g = compile_domain(d, domain_file);
            const PointedStructure p = initial_model(g, source);
            lang::Query q;
            try {
                q = lang::parse_query(query_text, g);
                check_declared(q.goal, *g.signature);
            } catch (const ParseError& e) {
                throw Failure{exit_usage, std::string("query: ") + e.what()};
            } catch (const DeclarationError& e) {
                throw Failure{exit_usage, std::string("query: ") + e.what()};
            }
            const QueryAnswer answer = holds_after(p, q);
            if (const auto* reason = std::get_if<UndefinedReason>(&answer)) {
                out << "undefined(" << to_string(*reason) << ")\n";
                return exit_undefined;
            }
            const bool value = std::get<bool>(answer);
            out << (value ? "true" : "false") << "\n";
            return value ? exit_true : exit_false;
        }
        if (plan->parsed()) {
            const lang::Domain d = load_domain(domain_file);
            const lang::GroundDomain g = compile_domain(d, domain_file);
            PlanRequest r{initial_model(g, source), &g, parse_goal(goal_text, *g.signature), max_len,
                          strategy == "bfs" ? Strategy::bfs : Strategy::dfs};
            r.iterative_deepening = !single_pass;
            const PlanResult result = find_plan(r);
            if (!result.found) {
                out << "NOT-FOUND\n";
                return 1;
            }
            for (const auto& name : result.names())
                out << name << "\n";
            return 0;
        }
        if (init->parsed()) {
            const lang::Domain d = load_domain(domain_file);
            const lang::GroundDomain g = compile_domain(d, domain_file);
            GenConfig cfg;
            cfg.max_states = init_states;
            cfg.limit = init_count;
            std::vector<PointedStructure> models;
            try {
                models = generate_explicit(g, cfg);
            } catch (const ArgumentError& e) {
                throw Failure{exit_data, e.what()};
            }
            if (!out_dir.empty())
                fs::create_directories(out_dir);
            for (std::size_t k = 0; k < models.size(); ++k) {
                const std::string doc = write_structure(models[k]);
                if (out_dir.empty()) {
                    out << "% model " << k + 1 << "\n" << doc;
                } else {
                    const fs::path file = fs::path(out_dir) / ("model_" + std::to_string(k + 1) + ".mks");
                    std::ofstream f(file, std::ios::binary);
                    if (!(f << doc))
                        throw Failure{exit_data, "cannot write " + file.string()};
                }
            }
            out << "found: " << models.size() << "\n";
            return 0;
        }
        if (puzzle->parsed()) {
            if (puzzle_name == "sumproduct")
                return run_puzzle(sum_product_domain(puzzle_max), out);
            if (max_opt->count() > 0)
                throw Failure{exit_usage, "--max only applies to the sumproduct puzzle"};
            return run_puzzle(load_domain(puzzle_name), out);
        }
        if (dot->parsed()) {
            const StructureDocument doc = load_structure(structure_file);
            out << to_dot(doc.structure, doc.real);
            return 0;
        }
    } catch (const Failure& f) {
        err << "mak: " << f.message << "\n";
        return f.code;
    } catch (const std::exception& e) {
        err << "mak: " << e.what() << "\n";
        return exit_internal;
    }
    return exit_usage;
}

} // namespace mak::cli
