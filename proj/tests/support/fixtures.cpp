#include "fixtures.hpp"

#include "mak/lang/parser.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#ifndef MAK_TEST_CORPUS
#error "MAK_TEST_CORPUS must point at the corpus directory"
#endif

namespace fixtures {

std::string corpus_path(const std::string& file)
{
    return std::string(MAK_TEST_CORPUS) + "/" + file;
}

std::string read_text(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

mak::lang::Domain coin_domain()
{
    return mak::lang::parse_domain(read_text(corpus_path("coin.mad")));
}

mak::lang::GroundDomain coin_ground()
{
    return mak::lang::compile(coin_domain());
}

mak::PointedStructure coin_model(const mak::SignaturePtr& sig)
{
    mak::KripkeStructure m(sig);
    mak::Interpretation up(sig->fluent_count());
    for (const char* f : {"has_key(a)", "looking_at_box(a)", "looking_at_box(c)"})
        up.set(sig->require_fluent(parse(f).fluent()), true);
    mak::Interpretation down = up;
    up.set(sig->require_fluent({"tail", {}}), true);
    m.add_state("u", up);
    m.add_state("d", down);
    for (std::size_t a = 0; a < sig->agent_count(); ++a)
        for (std::size_t s = 0; s < 2; ++s)
            for (std::size_t t = 0; t < 2; ++t)
                m.add_arc(s, a, t);
    return {m, 0};
}

mak::Formula coin_goal()
{
    return parse("(k(a,tail) | k(a,~tail)) & k(c, k(a,tail) | k(a,~tail)) & ~k(b,tail) & ~k(b,~tail)");
}

mak::Formula parse(const std::string& text)
{
    return mak::lang::parse_formula(text);
}

mak::KripkeStructure m2()
{
    auto sig = std::make_shared<const mak::Signature>(std::vector<mak::AgentId>{"a", "b", "c"},
                                                      std::vector<mak::FluentAtom>{{"tail", {}}});
    mak::KripkeStructure m(sig);
    mak::Interpretation up(1);
    up.set(0, true);
    m.add_state("s1", up);
    m.add_state("s2", mak::Interpretation(1));
    for (std::size_t a = 0; a < 3; ++a)
        for (std::size_t s = 0; s < 2; ++s)
            for (std::size_t t = 0; t < 2; ++t)
                m.add_arc(s, a, t);
    return m;
}

mak::PointedStructure m2_pointed()
{
    return {m2(), 0};
}

} // namespace fixtures
