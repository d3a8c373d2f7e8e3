#include <doctest.h>

#include "support/fixtures.hpp"
#include "support/oracle.hpp"
#include "support/random.hpp"

#include "mak/errors.hpp"
#include "mak/frame.hpp"
#include "mak/lang/parser.hpp"
#include "mak/transition.hpp"

using mak::Formula;
using mak::UndefinedReason;
using fixtures::parse;

namespace {

const mak::lang::ActionInstance& action(const mak::lang::GroundDomain& d, const std::string& text)
{
    const auto q = mak::lang::parse_query("true after [" + text + "]", d);
    return *q.actions.at(0);
}

mak::PointedStructure coin_initial(const mak::lang::GroundDomain& d)
{
    return fixtures::coin_model(d.signature);
}

} // namespace

TEST_SUITE("transition") {

TEST_CASE("executability")
{
    const auto d = fixtures::coin_ground();
    const auto p = coin_initial(d);
    CHECK(mak::executable(p, action(d, "peek(a,c)")));
    CHECK_FALSE(mak::executable(p, action(d, "peek(c,a)")));
    CHECK(oracle::holds(p, action(d, "peek(a,c)").pre));
    CHECK_FALSE(oracle::holds(p, action(d, "peek(c,a)").pre));

    const auto bare = mak::lang::compile(mak::lang::parse_domain("agent(a). fluent(f). go causes f performed_by a."));
    REQUIRE(bare.actions.size() == 1);
    CHECK(bare.actions[0].pre == Formula::top());
}

TEST_CASE("public announcements")
{
    const auto p = fixtures::m2_pointed();
    auto r = mak::succ_public(p, parse("tail"));
    REQUIRE(r.defined());
    CHECK(r.structure().structure.size() == 1);
    CHECK(r.structure().real_name() == "s1");
    CHECK(oracle::holds(r.structure(), parse("c([a,b,c], tail)")));

    const mak::PointedStructure at_s2{fixtures::m2(), 1};
    CHECK(mak::succ_public(at_s2, parse("tail")).reason() == UndefinedReason::untruthful_announcement);
    CHECK(mak::succ_public(p, parse("k(a,tail)")).reason() == UndefinedReason::untruthful_announcement);
    CHECK(mak::succ_public(p, parse("tail"), parse("false")).reason() == UndefinedReason::precondition_failed);
    // precondition is checked before truthfulness
    CHECK(mak::succ_public(at_s2, parse("tail"), parse("false")).reason() == UndefinedReason::precondition_failed);

    // ~(K_a tail | K_a ~tail) removes the states where a knows whether
    auto ignorance = mak::succ_public(p, parse("~(k(a,tail) | k(a,~tail))"));
    REQUIRE(ignorance.defined());
    CHECK(ignorance.structure().structure.size() == 2);

    CHECK_THROWS_AS((void)mak::succ_public(p, parse("e([a,b], true)")), mak::ArgumentError);
}

TEST_CASE("public knows announcement removes arcs")
{
    // a cannot tell s1 from s2, b can; announce k(b, tail) at s1
    auto m = fixtures::m2();
    m.remove_arc(0, 1, 1);
    m.remove_arc(1, 1, 0);
    const mak::PointedStructure p{m, 0};
    auto r = mak::succ_public(p, parse("k(b, tail)"));
    REQUIRE(r.defined());
    CHECK(r.structure().structure.size() == 2);
    CHECK(oracle::holds(r.structure(), parse("k(b, tail)")));
}

TEST_CASE("private announcement")
{
    const auto p = fixtures::m2_pointed();
    auto r = mak::succ_private(p, parse("tail"), {"a"}, {"b"});
    REQUIRE(r.defined());
    const auto& q = r.structure();
    CHECK(q.structure.size() == 4);
    CHECK(oracle::holds(q, parse("k(a,tail) & k(b,tail)")));
    CHECK(oracle::holds(q, parse("k(c, ~k(b,tail))")));

    CHECK(mak::succ_private(p, parse("~tail"), {"a"}, {"b"}).reason() == UndefinedReason::untruthful_announcement);
    CHECK_THROWS_AS((void)mak::succ_private(p, parse("tail & tail"), {"a"}, {"b"}), mak::ArgumentError);
}

TEST_CASE("peek(a,c) on the coin structure")
{
    const auto p = fixtures::m2_pointed();
    auto r = mak::succ_sense(p, {"tail", {}}, {"a"}, {"c"});
    REQUIRE(r.defined());
    const auto& q = r.structure();
    CHECK(q.structure.size() == 4);
    CHECK(oracle::holds(q, parse("k(a,tail)")));
    CHECK(oracle::holds(q, parse("k(c, k(a,tail) | k(a,~tail))")));
    CHECK(oracle::holds(q, parse("k(b, ~k(a,tail)) & k(b, ~k(a,~tail))")));
    CHECK_FALSE(oracle::holds(q, parse("k(c,tail)")));

    // sensing at the tails-down state teaches ~tail instead
    auto down = mak::succ_sense({fixtures::m2(), 1}, {"tail", {}}, {"a"}, {"c"});
    REQUIRE(down.defined());
    CHECK(oracle::holds(down.structure(), parse("k(a,~tail)")));
}

TEST_CASE("apply_literals")
{
    const auto m = fixtures::m2();
    const auto& sig = m.signature();
    const mak::FluentAtom tail{"tail", {}};
    CHECK(mak::apply_literals(m.interpretation(0), {{tail, true}}, sig) == m.interpretation(0));
    CHECK(mak::apply_literals(m.interpretation(0), {{tail, false}}, sig) == m.interpretation(1));
    CHECK_THROWS_AS((void)mak::apply_literals(m.interpretation(0), {{tail, true}, {tail, false}}, sig),
                    mak::ArgumentError);
}

TEST_CASE("distract(a,c) on the coin structure")
{
    const auto d = fixtures::coin_ground();
    const auto p = coin_initial(d);
    auto r = mak::succ(p, action(d, "distract(a,c)"));
    REQUIRE(r.defined());
    const auto& q = r.structure();
    CHECK(q.structure.size() == 4);
    CHECK(oracle::holds(q, parse("~looking_at_box(c)")));
    CHECK(oracle::holds(q, parse("k(a, ~looking_at_box(c))")));
    CHECK(oracle::holds(q, parse("k(c, looking_at_box(c))")));

    // afterwards c no longer looks, so peek(a,c) is not executable
    auto after = mak::succ(q, action(d, "peek(a,c)"));
    CHECK(after.reason() == UndefinedReason::precondition_failed);
}

TEST_CASE("ontic edge cases")
{
    const auto p = fixtures::m2_pointed();
    const mak::FluentAtom tail{"tail", {}};
    auto flip = mak::succ_ontic(p, {{{{tail, false}}, {}}}, {"a"});
    REQUIRE(flip.defined());
    for (std::size_t s = 0; s < flip.structure().structure.size(); ++s)
        if (flip.structure().structure.name(s).find('#') != std::string::npos)
            CHECK_FALSE(flip.structure().structure.value(s, 0));

    CHECK(mak::succ_ontic(p, {{{{tail, false}}, {}}}, {"a"}, parse("false")).reason() ==
          UndefinedReason::precondition_failed);
    // two laws applicable at the same state
    CHECK(mak::succ_ontic(p, {{{{tail, false}}, {}}, {{{tail, true}}, {}}}, {"a"}).reason() ==
          UndefinedReason::conflicting_causes_laws);
    // exclusive guards are fine
    CHECK(mak::succ_ontic(p, {{{{tail, false}}, {{tail, true}}}, {{{tail, true}}, {{tail, false}}}}, {"a"}).defined());
}

TEST_CASE("sequences")
{
    const auto d = fixtures::coin_ground();
    const auto p = coin_initial(d);
    auto empty = mak::succ_seq(p, {});
    REQUIRE(empty.defined());
    CHECK(empty.structure() == p);

    const auto q = mak::lang::parse_query("k(a,tail)|k(a,~tail) after [peek(a,c)]", d);
    auto r = mak::succ_seq(p, q.actions);
    REQUIRE(r.defined());
    CHECK(oracle::holds(r.structure(), q.goal));

    const auto bad = mak::lang::parse_query("true after [peek(a,c); peek(c,a); peek(a,c)]", d);
    CHECK(mak::succ_seq(p, bad.actions).reason() == UndefinedReason::precondition_failed);
}

TEST_CASE("determinism")
{
    const auto d = fixtures::coin_ground();
    const auto p = coin_initial(d);
    for (const char* a : {"peek(a,c)", "distract(b,a)"}) {
        auto r1 = mak::succ(p, action(d, a));
        auto r2 = mak::succ(p, action(d, a));
        REQUIRE(r1.defined());
        CHECK(r1.structure() == r2.structure());
    }
}

TEST_CASE("conservativity and oblivious agents on random applications")
{
    gen::Rng rng(11);
    int done[3] = {0, 0, 0};
    for (int trial = 0; done[0] + done[1] + done[2] < 300 && trial < 5000; ++trial) {
        auto sig = gen::signature(gen::uniform(rng, 2, 3), gen::uniform(rng, 1, 2));
        auto p = gen::pointed(rng, gen::structure(rng, sig, gen::uniform(rng, 1, 5), 0.4));
        const auto alpha = gen::agent_subset(rng, *sig);
        mak::AgentSet beta;
        for (const auto& a : gen::agent_subset(rng, *sig, true))
            if (alpha.count(a) == 0)
                beta.insert(a);
        mak::AgentSet aware = alpha;
        aware.insert(beta.begin(), beta.end());

        const int kind = static_cast<int>(trial % 3);
        if (done[kind] >= 100)
            continue;
        const mak::FluentAtom f = sig->fluents()[gen::uniform(rng, 0, sig->fluent_count() - 1)];
        mak::SuccessorResult r = UndefinedReason::precondition_failed;
        if (kind == 0) {
            r = mak::succ_sense(p, f, alpha, beta);
        } else if (kind == 1) {
            const bool val = p.structure.value(p.real, sig->require_fluent(f));
            const Formula lit = val ? Formula::atom(f) : Formula::negation(Formula::atom(f));
            r = mak::succ_private(p, lit, alpha, beta);
        } else {
            aware = alpha;
            std::vector<mak::lang::CausesEffect> effects{{{{f, gen::coin(rng)}}, {}}};
            r = mak::succ_ontic(p, effects, alpha, gen::fluent_formula(rng, *sig, 1));
        }
        if (!r.defined())
            continue;
        ++done[kind];
        const auto& q = r.structure();

        // old layer: every original state keeps the truth of every formula
        for (int k = 0; k < 4; ++k) {
            const Formula phi = gen::formula(rng, *sig, 3);
            const auto before = oracle::labels(p.structure, phi);
            const auto after = oracle::labels(q.structure, phi);
            for (std::size_t u = 0; u < p.structure.size(); ++u)
                CHECK(after[q.structure.index_of(p.structure.name(u))] == before[u]);
            for (const auto& i : sig->agents())
                if (aware.count(i) == 0) {
                    const Formula ki = Formula::knows(i, phi);
                    CHECK(oracle::holds(q, ki) == oracle::holds(p, ki));
                }
        }

        if (kind == 0) {
            const bool val = p.structure.value(p.real, sig->require_fluent(f));
            for (const auto& i : alpha) {
                // relations need not be reflexive, so only the true value is checked
                const Formula truth = val ? Formula::atom(f) : Formula::negation(Formula::atom(f));
                CHECK(oracle::holds(q, Formula::knows(i, truth)));
                for (const auto& j : beta)
                    CHECK(oracle::holds(q, Formula::knows(j, Formula::disjunction(
                                                                 Formula::knows(i, Formula::atom(f)),
                                                                 Formula::knows(i, Formula::negation(Formula::atom(f)))))));
            }
        }
    }
    CHECK(done[0] == 100);
    CHECK(done[1] == 100);
    CHECK(done[2] == 100);
}

TEST_CASE("public fluent announcements keep equivalence relations and yield common knowledge")
{
    gen::Rng rng(12);
    for (int trial = 0; trial < 100; ++trial) {
        auto sig = gen::signature(gen::uniform(rng, 1, 3), gen::uniform(rng, 1, 3));
        auto p = gen::pointed(rng, gen::s5_structure(rng, sig, gen::uniform(rng, 1, 6)));
        Formula phi = gen::fluent_formula(rng, *sig, 2);
        if (!oracle::holds(p, phi))
            phi = Formula::negation(phi);
        auto r = mak::succ_public(p, phi);
        REQUIRE(r.defined());
        CHECK(mak::frame_check(r.structure().structure, mak::FrameClass::rst).passed());
        const std::vector<mak::AgentId> all(sig->agents().begin(), sig->agents().end());
        CHECK(oracle::holds(r.structure(), Formula::common(all, phi)));
    }
}

} // TEST_SUITE
