// Acceptance suite: one PASS/FAIL line per criterion. Exit status is the
// number of failed criteria (0 when everything passes).

#include "support/brute.hpp"
#include "support/domains.hpp"
#include "support/fixtures.hpp"
#include "support/oracle.hpp"
#include "support/random.hpp"

#include "mak/cli/app.hpp"
#include "mak/eval.hpp"
#include "mak/frame.hpp"
#include "mak/initgen.hpp"
#include "mak/lang/parser.hpp"
#include "mak/lang/printer.hpp"
#include "mak/plan.hpp"
#include "mak/transform.hpp"
#include "mak/transition.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>

using mak::Formula;
using fixtures::parse;

namespace {

// pinned limits
constexpr double sumproduct_seconds = 60.0;
constexpr double planning_seconds = 5.0;
constexpr int random_structures = 200;
constexpr int random_transform_inputs = 200;
constexpr int random_applications = 100;
constexpr int random_rst_cases = 100;

struct Verdict {
    bool pass = true;
    std::string detail;

    void fail(const std::string& why)
    {
        if (pass)
            detail = why;
        pass = false;
    }
};

double seconds_since(std::chrono::steady_clock::time_point t0)
{
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

mak::PointedStructure coin_initial(const mak::lang::GroundDomain& d)
{
    mak::GenConfig cfg;
    cfg.max_states = 2;
    mak::ExplicitGenerator g(d, cfg);
    auto p = g.next();
    if (!p)
        throw std::runtime_error("no initial coin model");
    return *p;
}

Verdict criterion_1()
{
    Verdict v;
    const auto t0 = std::chrono::steady_clock::now();
    const char* argv[] = {"mak", "puzzle", "sumproduct", "--max", "100"};
    std::ostringstream out, err;
    const int code = mak::cli::run(5, argv, out, err);
    const double took = seconds_since(t0);
    const std::string text = out.str();
    if (code != 0)
        v.fail("exit status " + std::to_string(code));
    if (text.find("initial states: 2352\n") != 0)
        v.fail("initial universe is not 2352 states");
    const std::string tail = "after announcement 3: 1\nx=4 y=13\n";
    if (text.size() < tail.size() || text.compare(text.size() - tail.size(), tail.size(), tail) != 0)
        v.fail("solution is not exactly x=4 y=13");
    const auto expect = brute::sum_product(100);
    if (expect.initial != 2352 || expect.solutions != std::vector<std::pair<long, long>>{{4, 13}})
        v.fail("counting oracle disagrees");
    if (took > sumproduct_seconds)
        v.fail("took " + std::to_string(took) + " s");
    if (v.pass) {
        char buf[128];
        std::snprintf(buf, sizeof buf, "2352 states, unique solution x=4 y=13 in %.2f s", took);
        v.detail = buf;
    }
    return v;
}

Verdict criterion_2()
{
    Verdict v;
    const auto d = fixtures::coin_ground();
    const auto p = coin_initial(d);
    const auto expected = fixtures::coin_model(d.signature);
    const auto& m = p.structure;
    if (m.size() != 2)
        v.fail("first model has " + std::to_string(m.size()) + " states");
    auto c = mak::find_equivalence(p, expected);
    if (!c || !mak::c_equivalent(m, expected.structure, *c))
        v.fail("not c-equivalent to the two-state model");
    if (m.size() == 2) {
        const std::size_t tail = d.signature->require_fluent({"tail", {}});
        for (std::size_t f = 0; f < d.signature->fluent_count(); ++f)
            if ((m.value(0, f) != m.value(1, f)) != (f == tail))
                v.fail("interpretations differ on more than tail");
        for (std::size_t a = 0; a < m.agent_count(); ++a)
            if (oracle::relation_of(m, a).size() != 4)
                v.fail("relation of " + d.signature->agents()[a] + " is not total");
    }
    if (v.pass)
        v.detail = "two states differing only on tail, total relations for a, b, c";
    return v;
}

Verdict criterion_3()
{
    Verdict v;
    const auto d = fixtures::coin_ground();
    const auto p = coin_initial(d);
    const auto q = mak::lang::parse_query("true after [peek(a,c)]", d);
    auto r = mak::succ(p, *q.actions.at(0));
    if (!r.defined())
        return {false, "peek(a,c) undefined: " + std::string(mak::to_string(r.reason()))};
    const std::pair<const char*, bool> checks[] = {
        {"k(a,tail)", true},
        {"k(c, k(a,tail) | k(a,~tail))", true},
        {"k(b, ~k(a,tail))", true},
        {"k(b, ~k(a,~tail))", true},
        {"k(c,tail)", false},
    };
    for (const auto& [text, want] : checks) {
        const Formula f = parse(text);
        if (mak::entails(r.structure(), f) != want || oracle::holds(r.structure(), f) != want)
            v.fail(std::string(text) + " should be " + (want ? "true" : "false"));
    }
    if (v.pass)
        v.detail = std::to_string(r.structure().structure.size()) + "-state successor, all five values as expected";
    return v;
}

Verdict criterion_4()
{
    Verdict v;
    const auto d = fixtures::coin_ground();
    const auto p = coin_initial(d);
    const Formula goal = fixtures::coin_goal();
    double worst = 0;
    for (auto s : {mak::Strategy::dfs, mak::Strategy::bfs}) {
        const mak::PlanRequest r{p, &d, goal, 3, s};
        const auto t0 = std::chrono::steady_clock::now();
        const auto res = mak::find_plan(r);
        const double took = seconds_since(t0);
        worst = std::max(worst, took);
        const char* name = s == mak::Strategy::dfs ? "dfs" : "bfs";
        if (!res.found || res.names() != std::vector<std::string>{"peek(a,c)"})
            v.fail(std::string(name) + " did not return [peek(a,c)]");
        if (took > planning_seconds)
            v.fail(std::string(name) + " took " + std::to_string(took) + " s");
    }
    const auto truth = brute::shortest_plan(p, d, goal, 3);
    if (!truth || truth->length != 1 || d.actions[truth->plan[0]].name() != "peek(a,c)")
        v.fail("exhaustive enumeration disagrees");
    if (v.pass) {
        char buf[128];
        std::snprintf(buf, sizeof buf, "both planners return [peek(a,c)], shortest by enumeration, max %.3f s", worst);
        v.detail = buf;
    }
    return v;
}

Verdict criterion_5a()
{
    Verdict v;
    gen::Rng rng(501);
    for (int i = 0; i < random_structures; ++i) {
        auto sig = gen::signature(gen::uniform(rng, 1, 3), gen::uniform(rng, 1, 3));
        auto p = gen::pointed(rng, gen::structure(rng, sig, gen::uniform(rng, 1, 6), 0.35));
        const Formula f = gen::formula(rng, *sig, 3);
        if (mak::entails(p, f) == mak::entails(p, Formula::negation(f)))
            v.fail("negation completeness, case " + std::to_string(i));
        const auto g = gen::agent_subset(rng, *sig);
        const Formula c = Formula::common({g.begin(), g.end()}, f);
        const auto lib = mak::label_states(p.structure, c);
        const auto ref = oracle::labels(p.structure, c);
        if (!std::equal(lib.begin(), lib.end(), ref.begin()))
            v.fail("common knowledge vs E^k tower, case " + std::to_string(i));
    }
    if (v.pass)
        v.detail = std::to_string(random_structures) + " random structures, |S| <= 6";
    return v;
}

Verdict criterion_5b()
{
    Verdict v;
    gen::Rng rng(502);
    for (int i = 0; i < random_transform_inputs; ++i) {
        auto sig = gen::signature(gen::uniform(rng, 1, 3), gen::uniform(rng, 1, 2));
        const auto m = gen::structure(rng, sig, gen::uniform(rng, 1, 6), 0.4);
        const std::string tag = ", case " + std::to_string(i);

        // idempotence
        if (!(mak::kappa_union(m, m) == m))
            v.fail("kappa union not idempotent" + tag);
        std::vector<mak::ArcTriple> xs;
        for (std::size_t a = 0; a < m.agent_count(); ++a)
            for (std::size_t s = 0; s < m.size(); ++s)
                for (std::size_t t : m.successors(a, s))
                    if (gen::coin(rng, 0.3))
                        xs.push_back({m.name(s), sig->agents()[a], m.name(t)});
        const auto once = mak::arc_remove(m, xs);
        if (!(mak::arc_remove(once, xs) == once))
            v.fail("arc removal not idempotent" + tag);
        const auto group = gen::agent_subset(rng, *sig, true);
        const auto restricted = mak::restriction(m, group);
        if (!(mak::restriction(restricted, group) == restricted))
            v.fail("restriction not idempotent" + tag);

        // disjointness
        const auto r1 = mak::replica(m);
        const auto r2 = mak::replica(mak::kappa_union(m, r1.structure));
        std::set<mak::StateId> seen(m.names().begin(), m.names().end());
        for (const auto* names : {&r1.structure.names(), &r2.structure.names()})
            for (const auto& n : *names)
                if (!seen.insert(n).second)
                    v.fail("replica names overlap" + tag);
        if (!mak::c_equivalent(m, r1.structure, r1.map))
            v.fail("replica not c-equivalent" + tag);

        // alpha = A
        mak::RenamingMap lambda;
        for (const auto& [orig, copy] : r1.map)
            lambda[copy] = orig;
        const mak::AgentSet all(sig->agents().begin(), sig->agents().end());
        if (!(mak::annotated_union(m, r1.structure, all, lambda) == mak::kappa_union(m, r1.structure)))
            v.fail("annotated union with all agents differs from kappa union" + tag);
    }
    if (v.pass)
        v.detail = std::to_string(random_transform_inputs) + " random inputs";
    return v;
}

Verdict criterion_5c()
{
    Verdict v;
    gen::Rng rng(503);
    int applied = 0;
    int counts[3] = {0, 0, 0};
    for (int trial = 0; applied < random_applications && trial < 100 * random_applications; ++trial) {
        auto sig = gen::signature(gen::uniform(rng, 2, 3), gen::uniform(rng, 1, 2));
        auto p = gen::pointed(rng, gen::structure(rng, sig, gen::uniform(rng, 1, 5), 0.4));
        const auto alpha = gen::agent_subset(rng, *sig);
        mak::AgentSet beta;
        for (const auto& a : gen::agent_subset(rng, *sig, true))
            if (alpha.count(a) == 0)
                beta.insert(a);
        mak::AgentSet aware = alpha;
        aware.insert(beta.begin(), beta.end());
        const mak::FluentAtom f = sig->fluents()[gen::uniform(rng, 0, sig->fluent_count() - 1)];
        const int kind = applied % 3;
        mak::SuccessorResult r = mak::UndefinedReason::precondition_failed;
        if (kind == 0) {
            r = mak::succ_sense(p, f, alpha, beta);
        } else if (kind == 1) {
            const bool val = p.structure.value(p.real, sig->require_fluent(f));
            r = mak::succ_private(p, val ? Formula::atom(f) : Formula::negation(Formula::atom(f)), alpha, beta);
        } else {
            aware = alpha;
            r = mak::succ_ontic(p, {{{{f, gen::coin(rng)}}, {}}}, alpha, gen::fluent_formula(rng, *sig, 1));
        }
        if (!r.defined())
            continue;
        ++applied;
        ++counts[kind];
        const auto& q = r.structure();
        for (int k = 0; k < 3; ++k) {
            const Formula phi = gen::formula(rng, *sig, 3);
            const auto before = oracle::labels(p.structure, phi);
            const auto after = oracle::labels(q.structure, phi);
            for (std::size_t u = 0; u < p.structure.size(); ++u)
                if (after[q.structure.index_of(p.structure.name(u))] != before[u])
                    v.fail("old layer changed, application " + std::to_string(applied));
            for (const auto& i : sig->agents())
                if (aware.count(i) == 0 && oracle::holds(q, Formula::knows(i, phi)) != oracle::holds(p, Formula::knows(i, phi)))
                    v.fail("oblivious agent " + i + " changed, application " + std::to_string(applied));
        }
    }
    if (applied < random_applications)
        v.fail("only " + std::to_string(applied) + " defined applications");
    if (v.pass)
        v.detail = std::to_string(counts[0]) + " sense, " + std::to_string(counts[1]) + " private, " +
                   std::to_string(counts[2]) + " ontic; formulas of depth <= 3";
    return v;
}

Verdict criterion_5d()
{
    Verdict v;
    gen::Rng rng(504);
    for (int i = 0; i < random_rst_cases; ++i) {
        auto sig = gen::signature(gen::uniform(rng, 1, 3), gen::uniform(rng, 1, 3));
        auto p = gen::pointed(rng, gen::s5_structure(rng, sig, gen::uniform(rng, 1, 6)));
        if (!mak::frame_check(p.structure, mak::FrameClass::rst).passed())
            v.fail("generator produced a non-rst structure");
        std::vector<char> drop(p.structure.size());
        for (auto& c : drop)
            c = gen::coin(rng, 0.4);
        if (!mak::frame_check(mak::state_remove(p.structure, drop), mak::FrameClass::rst).passed())
            v.fail("state removal broke rst, case " + std::to_string(i));
        Formula phi = gen::fluent_formula(rng, *sig, 2);
        if (!mak::entails(p, phi))
            phi = Formula::negation(phi);
        auto r = mak::succ_public(p, phi);
        if (!r.defined() || !mak::frame_check(r.structure().structure, mak::FrameClass::rst).passed())
            v.fail("public announcement broke rst, case " + std::to_string(i));
    }
    if (v.pass)
        v.detail = std::to_string(random_rst_cases) + " random cases";
    return v;
}

Verdict criterion_5e()
{
    Verdict v;
    std::size_t domains_seen = 0, searches = 0, solvable = 0;
    for (const auto& sd : domains::small_domains(4)) {
        const auto d = mak::lang::compile(mak::lang::parse_domain(sd.text));
        if (d.actions.size() > 4 || d.signature->agent_count() > 2 || d.signature->fluent_count() > 2)
            v.fail("domain outside the family bounds");
        ++domains_seen;
        for (const auto& p : domains::small_initials(d, 2))
            for (const auto& goal : domains::small_goals(*d.signature)) {
                const auto truth = brute::shortest_plan(p, d, goal, 3);
                for (std::size_t n = 0; n <= 3; ++n) {
                    const mak::PlanRequest r{p, &d, goal, n, mak::Strategy::bfs};
                    const auto res = mak::breadth_plan(r);
                    ++searches;
                    const bool reachable = truth && truth->length <= n;
                    solvable += reachable ? 1 : 0;
                    bool ok = res.found == reachable;
                    if (ok && reachable) {
                        ok = res.plan.size() == truth->length;
                        for (std::size_t i = 0; ok && i < res.plan.size(); ++i)
                            ok = res.plan[i] == &d.actions[truth->plan[i]];
                        auto replay = mak::succ_seq(p, res.plan);
                        ok = ok && replay.defined() && oracle::holds(replay.structure(), goal);
                    }
                    if (!ok)
                        v.fail("goal " + goal.to_string() + ", N=" + std::to_string(n) + " in\n" + sd.text);
                }
            }
    }
    if (v.pass)
        v.detail = std::to_string(domains_seen) + " domains, " + std::to_string(searches) + " searches (" +
                   std::to_string(solvable) + " solvable), N <= 3";
    return v;
}

Verdict criterion_6()
{
    Verdict v;
    const std::string text = fixtures::read_text(fixtures::corpus_path("coin.mad"));
    const auto d = mak::lang::parse_domain(text);
    const auto g = mak::lang::ground(d);
    std::size_t peek = 0, distract = 0;
    for (const auto& law : g.laws) {
        peek += law.action.name == "peek" && law.kind == mak::lang::LawKind::determines ? 1 : 0;
        distract += law.action.name == "distract" && law.kind == mak::lang::LawKind::causes ? 1 : 0;
    }
    if (peek != 9 || distract != 9)
        v.fail(std::to_string(peek) + " peek and " + std::to_string(distract) + " distract instances");
    if (d.agents.size() != 3 || d.inits.size() != 12)
        v.fail("expected 3 agents and 12 init axioms");
    const std::string once = mak::lang::print_domain(d);
    const std::string twice = mak::lang::print_domain(mak::lang::parse_domain(once));
    if (once != twice)
        v.fail("print(parse(print)) differs from print");
    if (v.pass)
        v.detail = "9 peek and 9 distract instances, byte-identical round trip (" + std::to_string(once.size()) +
                   " bytes)";
    return v;
}

} // namespace

int main()
{
    const std::pair<const char*, std::function<Verdict()>> criteria[] = {
        {"1  sum-and-product", criterion_1},
        {"2  coin initial model", criterion_2},
        {"3  peek(a,c) update", criterion_3},
        {"4  planning", criterion_4},
        {"5a negation and common knowledge", criterion_5a},
        {"5b transform laws", criterion_5b},
        {"5c conservativity and oblivious agents", criterion_5c},
        {"5d rst preservation", criterion_5d},
        {"5e bfs optimality", criterion_5e},
        {"6  parser", criterion_6},
    };
    int failed = 0;
    for (const auto& [name, run] : criteria) {
        Verdict v;
        try {
            v = run();
        } catch (const std::exception& e) {
            v = {false, std::string("exception: ") + e.what()};
        }
        std::printf("%s criterion %s: %s\n", v.pass ? "PASS" : "FAIL", name, v.detail.c_str());
        std::fflush(stdout);
        failed += v.pass ? 0 : 1;
    }
    return failed;
}
