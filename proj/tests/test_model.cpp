#include <doctest.h>

#include "support/fixtures.hpp"
#include "support/oracle.hpp"
#include "support/random.hpp"

#include "mak/errors.hpp"
#include "mak/eval.hpp"
#include "mak/frame.hpp"
#include "mak/kernels.hpp"
#include "mak/transform.hpp"

using mak::Formula;
using fixtures::parse;

namespace {

std::vector<bool> as_bools(const mak::StateLabels& l)
{
    return {l.begin(), l.end()};
}

} // namespace

TEST_SUITE("model") {

TEST_CASE("coin structure satisfaction")
{
    const auto p = fixtures::m2_pointed();
    CHECK(mak::entails(p, parse("tail")));
    CHECK(mak::entails(p, parse("~k(a,tail)")));
    CHECK(mak::entails(p, parse("c([a,b,c], ~(k(a,tail) | k(a,~tail)))")));
    CHECK_FALSE(mak::entails(p, parse("e([a,b], tail)")));
    CHECK(oracle::holds(p, parse("c([a,b,c], ~(k(a,tail) | k(a,~tail)))")));
}

TEST_CASE("undeclared symbols are rejected")
{
    const auto p = fixtures::m2_pointed();
    CHECK_THROWS_AS((void)mak::entails(p, parse("head")), mak::DeclarationError);
    CHECK_THROWS_AS((void)mak::entails(p, parse("k(d, tail)")), mak::DeclarationError);
    CHECK_THROWS_AS((void)mak::entails(p, parse("kv(a, tail)")), mak::DeclarationError);
}

TEST_CASE("knows is vacuous at a dangling state")
{
    auto m = fixtures::m2();
    m.clear_relation(0);
    CHECK(mak::holds_at(m, 0, parse("k(a, false)")));
    CHECK_FALSE(mak::holds_at(m, 0, parse("k(b, false)")));
}

TEST_CASE("common knowledge needs a nonempty path")
{
    // s1 -a-> s2 only; p false at s1, true at s2
    auto sig = gen::signature(1, 1);
    mak::KripkeStructure m(sig);
    m.add_state("s1", mak::Interpretation(1));
    mak::Interpretation t(1);
    t.set(0, true);
    m.add_state("s2", t);
    m.add_arc(0, 0, 1);
    CHECK(mak::holds_at(m, 0, parse("c([a], p)")));
    CHECK_FALSE(mak::holds_at(m, 0, parse("p")));
    CHECK(mak::holds_at(m, 1, parse("c([a], false)")));
}

TEST_CASE("frame check examples")
{
    auto m = fixtures::m2();
    CHECK(mak::frame_check(m, mak::FrameClass::rst).passed());

    m.remove_arc(0, 0, 1);
    auto r = mak::frame_check(m, mak::FrameClass::rst);
    REQUIRE_FALSE(r.passed());
    CHECK(r.violation->property == mak::FrameProperty::symmetric);
    CHECK(r.violation->agent == "a");
    CHECK(r.violation->witness == std::vector<mak::StateId>{"s2", "s1"});

    mak::KripkeStructure lone(gen::signature(1, 1));
    lone.add_state("s1", mak::Interpretation(1));
    auto e = mak::frame_check(lone, mak::FrameClass::elt);
    REQUIRE_FALSE(e.passed());
    CHECK(e.violation->property == mak::FrameProperty::serial);
    CHECK(e.violation->witness == std::vector<mak::StateId>{"s1"});
}

TEST_CASE("frame closure examples")
{
    auto sig = gen::signature(1, 1);
    auto three = [&] {
        mak::KripkeStructure m(sig);
        for (const char* s : {"s1", "s2", "s3"})
            m.add_state(s, mak::Interpretation(1));
        return m;
    };

    mak::KripkeStructure two(sig);
    two.add_state("s1", mak::Interpretation(1));
    two.add_state("s2", mak::Interpretation(1));
    auto r = mak::frame_closure(two, mak::FrameClass::r);
    CHECK(oracle::relation_of(r, 0) == oracle::Relation{{0, 0}, {1, 1}});

    auto chain = three();
    chain.add_arc(0, 0, 1);
    chain.add_arc(1, 0, 2);
    auto rt = mak::frame_closure(chain, mak::FrameClass::rt);
    CHECK(oracle::relation_of(rt, 0) == oracle::Relation{{0, 0}, {0, 1}, {0, 2}, {1, 1}, {1, 2}, {2, 2}});

    auto fork = three();
    fork.add_arc(0, 0, 1);
    fork.add_arc(0, 0, 2);
    auto elt = mak::frame_closure(fork, mak::FrameClass::elt);
    const auto expected = oracle::naive_closure(oracle::relation_of(fork, 0), 3, false, false, true, true);
    CHECK(oracle::relation_of(elt, 0) == expected);
    for (std::pair<std::size_t, std::size_t> p : {std::pair{1u, 2u}, {2u, 1u}, {1u, 1u}, {2u, 2u}})
        CHECK(expected.count(p) == 1);
}

TEST_CASE("closure soundness, idempotence and monotonicity on random relations")
{
    gen::Rng rng(17);
    for (int trial = 0; trial < 200; ++trial) {
        auto sig = gen::signature(gen::uniform(rng, 1, 2), 1);
        auto m = gen::structure(rng, sig, gen::uniform(rng, 1, 6), 0.2);
        for (auto c : {mak::FrameClass::r, mak::FrameClass::rt, mak::FrameClass::rst, mak::FrameClass::elt}) {
            auto closed = mak::frame_closure(m, c);
            for (auto prop : mak::closure_properties(c))
                CHECK(mak::check_property(closed, prop).passed());
            CHECK(mak::frame_closure(closed, c) == closed);
            const auto props = mak::closure_properties(c);
            auto has = [&](mak::FrameProperty p) { return std::find(props.begin(), props.end(), p) != props.end(); };
            for (std::size_t a = 0; a < m.agent_count(); ++a) {
                const auto before = oracle::relation_of(m, a);
                const auto after = oracle::relation_of(closed, a);
                CHECK(std::includes(after.begin(), after.end(), before.begin(), before.end()));
                CHECK(after == oracle::naive_closure(before, m.size(), has(mak::FrameProperty::reflexive),
                                                     has(mak::FrameProperty::symmetric),
                                                     has(mak::FrameProperty::transitive),
                                                     has(mak::FrameProperty::euclidean)));
            }
        }
    }
}

TEST_CASE("frame check agrees with the relation oracles")
{
    gen::Rng rng(23);
    for (int trial = 0; trial < 300; ++trial) {
        auto sig = gen::signature(1, 1);
        auto m = gen::structure(rng, sig, gen::uniform(rng, 1, 5), 0.5);
        const auto r = oracle::relation_of(m, 0);
        const std::size_t n = m.size();
        CHECK(mak::frame_check(m, mak::FrameClass::r).passed() == oracle::is_reflexive(r, n));
        CHECK(mak::frame_check(m, mak::FrameClass::rt).passed() ==
              (oracle::is_reflexive(r, n) && oracle::is_transitive(r)));
        CHECK(mak::frame_check(m, mak::FrameClass::rst).passed() ==
              (oracle::is_reflexive(r, n) && oracle::is_symmetric(r) && oracle::is_transitive(r)));
        CHECK(mak::frame_check(m, mak::FrameClass::elt).passed() ==
              (oracle::is_transitive(r) && oracle::is_euclidean(r) && oracle::is_serial(r, n)));
    }
}

TEST_CASE("evaluator agrees with the oracle on random structures")
{
    gen::Rng rng(1);
    for (int trial = 0; trial < 200; ++trial) {
        auto sig = gen::signature(gen::uniform(rng, 1, 3), gen::uniform(rng, 1, 3), gen::coin(rng));
        auto m = gen::structure(rng, sig, gen::uniform(rng, 1, 6), 0.35);
        const Formula f = gen::formula(rng, *sig, 3);
        const auto expect = oracle::labels(m, f);
        CHECK(as_bools(mak::label_states(m, f, mak::Execution::serial)) == expect);
        CHECK(as_bools(mak::label_states(m, f, mak::Execution::parallel)) == expect);
    }
}

TEST_CASE("negation completeness and operator agreement")
{
    gen::Rng rng(2);
    for (int trial = 0; trial < 200; ++trial) {
        auto sig = gen::signature(gen::uniform(rng, 1, 3), gen::uniform(rng, 1, 2));
        auto p = gen::pointed(rng, gen::structure(rng, sig, gen::uniform(rng, 1, 6), 0.4));
        const Formula f = gen::formula(rng, *sig, 3);
        CHECK(mak::entails(p, f) != mak::entails(p, Formula::negation(f)));

        const auto group = gen::agent_subset(rng, *sig);
        const std::vector<mak::AgentId> g(group.begin(), group.end());
        bool all = true;
        for (const auto& i : g)
            all = all && mak::entails(p, Formula::knows(i, f));
        CHECK(mak::entails(p, Formula::everyone(g, f)) == all);
        CHECK(mak::entails(p, Formula::common(g, f)) == oracle::holds(p, Formula::common(g, f)));
    }
}

TEST_CASE("knows-value equals the explicit disjunction")
{
    gen::Rng rng(3);
    for (int trial = 0; trial < 100; ++trial) {
        auto sig = gen::signature(2, 1, true);
        auto m = gen::s5_structure(rng, sig, gen::uniform(rng, 1, 6));
        for (const char* i : {"a", "b"}) {
            const Formula kv = Formula::knows_value(i, "v");
            CHECK(as_bools(mak::label_states(m, kv)) == oracle::labels(m, oracle::expand_knows_value(kv, *sig)));
        }
    }
}

TEST_CASE("parallel and serial kernels agree above the threshold")
{
    gen::Rng rng(4);
    for (int trial = 0; trial < 4; ++trial) {
        auto sig = gen::signature(2, 2);
        auto m = gen::structure(rng, sig, mak::kernels::parallel_threshold + 100, 3.0 / 600);
        const Formula f = gen::formula(rng, *sig, 3);
        CHECK(mak::kernels::label_serial(m, f) == mak::kernels::label_parallel(m, f));
    }
    std::vector<std::int64_t> keys;
    for (int i = 0; i < 2000; ++i)
        keys.push_back(static_cast<std::int64_t>(rng() % 97) - 40);
    CHECK(mak::kernels::equal_key_successors_serial(keys) == mak::kernels::equal_key_successors_parallel(keys));
}

} // TEST_SUITE
