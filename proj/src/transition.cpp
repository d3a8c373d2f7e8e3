#include "mak/transition.hpp"

#include "mak/errors.hpp"
#include "mak/eval.hpp"

#include <algorithm>

namespace mak {

std::string_view to_string(UndefinedReason r)
{
    switch (r) {
    case UndefinedReason::precondition_failed:
        return "precondition-failed";
    case UndefinedReason::untruthful_announcement:
        return "untruthful-announcement";
    case UndefinedReason::conflicting_causes_laws:
        return "conflicting-causes-laws";
    }
    return "?";
}

bool executable(const PointedStructure& p, const lang::ActionInstance& a)
{
    return entails(p, a.pre);
}

namespace {

PointedStructure remove_states(const PointedStructure& p, const StateLabels& drop)
{
    std::vector<char> mask(drop.begin(), drop.end());
    std::size_t real = 0;
    for (std::size_t s = 0; s < p.real; ++s)
        real += mask[s] ? 0 : 1;
    return {state_remove(p.structure, mask), real};
}

bool ignorance_shape(const Formula& phi)
{
    using K = Formula::Kind;
    if (phi.kind() != K::negation || phi.operand().kind() != K::disjunction)
        return false;
    const Formula& l = phi.operand().lhs();
    const Formula& r = phi.operand().rhs();
    return l.kind() == K::knows && r.kind() == K::knows && l.agent() == r.agent() &&
           r.operand().kind() == K::negation && r.operand().operand() == l.operand();
}

// Replica of M whose arcs are kept only for the aware agents, minus the arcs
// of `discriminating` agents that join states disagreeing on `fluent`; glued
// back to M for everybody else.
PointedStructure aware_layer(const PointedStructure& p, std::size_t fluent, const AgentSet& aware,
                             const AgentSet& discriminating)
{
    const KripkeStructure& m = p.structure;
    const Signature& sig = m.signature();
    Replica r = replica(m);

    AgentSet oblivious;
    for (const auto& a : sig.agents())
        if (aware.count(a) == 0)
            oblivious.insert(a);
    KripkeStructure layer = restriction(r.structure, oblivious);

    std::vector<ArcTriple> x;
    for (const auto& agent : discriminating) {
        const std::size_t i = sig.require_agent(agent);
        for (std::size_t u = 0; u < layer.size(); ++u)
            for (std::size_t v : layer.successors(i, u))
                if (layer.value(u, fluent) != layer.value(v, fluent))
                    x.push_back({layer.name(u), agent, layer.name(v)});
    }
    layer = arc_remove(layer, x);

    RenamingMap lambda;
    for (const auto& [orig, copy] : r.map)
        lambda.emplace(copy, orig);
    KripkeStructure out = annotated_union(m, layer, aware, lambda);
    const std::size_t real = out.index_of(r.map.at(p.real_name()));
    return {std::move(out), real};
}

void require_agents(const Signature& sig, const AgentSet& agents)
{
    for (const auto& a : agents)
        if (!sig.agent_index(a))
            throw ArgumentError("unknown agent '" + a + "'");
}

} // namespace

SuccessorResult succ_public(const PointedStructure& p, const Formula& phi, const Formula& pre)
{
    const bool fluent_case = phi.is_fluent_formula();
    const bool knows_case = phi.kind() == Formula::Kind::knows;
    const bool ignorance_case = ignorance_shape(phi);
    if (!fluent_case && !knows_case && !ignorance_case)
        throw ArgumentError("public announcement of an unsupported formula: " + phi.to_string());
    if (!entails(p, pre))
        return UndefinedReason::precondition_failed;
    if (!entails(p, phi))
        return UndefinedReason::untruthful_announcement;

    const KripkeStructure& m = p.structure;
    if (fluent_case) {
        StateLabels keep = label_states(m, phi);
        for (auto& c : keep)
            c = !c;
        return remove_states(p, keep);
    }
    if (knows_case) {
        const std::size_t i = m.signature().require_agent(phi.agent());
        const StateLabels psi = label_states(m, phi.operand());
        std::vector<ArcTriple> x;
        for (std::size_t u = 0; u < m.size(); ++u)
            for (std::size_t v : m.successors(i, u))
                if (!psi[v])
                    x.push_back({m.name(u), phi.agent(), m.name(v)});
        return PointedStructure{arc_remove(m, x), p.real};
    }
    // states where the agent knows whether psi are incompatible with the announcement
    return remove_states(p, label_states(m, phi.operand()));
}

SuccessorResult succ_private(const PointedStructure& p, const Formula& literal, const AgentSet& alpha,
                             const AgentSet& beta, const Formula& pre)
{
    if (!literal.is_literal())
        throw ArgumentError("private announcement payload must be a fluent literal: " + literal.to_string());
    const Signature& sig = p.structure.signature();
    require_agents(sig, alpha);
    require_agents(sig, beta);
    const FluentAtom& f = literal.kind() == Formula::Kind::atom ? literal.fluent() : literal.operand().fluent();
    const std::size_t fi = sig.require_fluent(f);
    if (!entails(p, pre))
        return UndefinedReason::precondition_failed;
    if (!entails(p, literal))
        return UndefinedReason::untruthful_announcement;
    AgentSet aware = alpha;
    aware.insert(beta.begin(), beta.end());
    return aware_layer(p, fi, aware, aware);
}

SuccessorResult succ_sense(const PointedStructure& p, const FluentAtom& f, const AgentSet& alpha,
                           const AgentSet& beta, const Formula& pre)
{
    const Signature& sig = p.structure.signature();
    require_agents(sig, alpha);
    require_agents(sig, beta);
    const std::size_t fi = sig.require_fluent(f);
    if (!entails(p, pre))
        return UndefinedReason::precondition_failed;
    AgentSet aware = alpha;
    aware.insert(beta.begin(), beta.end());
    return aware_layer(p, fi, aware, alpha);
}

Interpretation apply_literals(const Interpretation& pi, const std::vector<lang::Literal>& phi, const Signature& sig)
{
    Interpretation out = pi;
    std::vector<char> forced(sig.fluent_count(), 0);
    for (const auto& l : phi) {
        const std::size_t i = sig.fluent_index(l.atom).value_or(sig.fluent_count());
        if (i == sig.fluent_count())
            throw ArgumentError("unknown fluent '" + l.atom.to_string() + "'");
        const char want = l.positive ? 1 : 2;
        if (forced[i] != 0 && forced[i] != want)
            throw ArgumentError("inconsistent literals on '" + l.atom.to_string() + "'");
        forced[i] = want;
        out.set(i, l.positive);
    }
    return out;
}

namespace {

bool literals_hold(const Interpretation& pi, const std::vector<lang::Literal>& lits, const Signature& sig)
{
    for (const auto& l : lits)
        if (pi[sig.require_fluent(l.atom)] != l.positive)
            return false;
    return true;
}

} // namespace

SuccessorResult succ_ontic(const PointedStructure& p, const std::vector<lang::CausesEffect>& effects,
                           const AgentSet& alpha, const Formula& pre)
{
    const KripkeStructure& m = p.structure;
    const Signature& sig = m.signature();
    require_agents(sig, alpha);
    if (!entails(p, pre))
        return UndefinedReason::precondition_failed;

    const StateLabels enabled = label_states(m, pre);
    const std::string suffix = "#" + std::to_string(next_epoch(m));

    // Res: one fresh state per pre-satisfying state
    KripkeStructure q(m.signature_ptr());
    std::vector<std::size_t> copy_of(m.size(), m.size());
    RenamingMap lambda;
    for (std::size_t u = 0; u < m.size(); ++u) {
        if (!enabled[u])
            continue;
        const lang::CausesEffect* applicable = nullptr;
        for (const auto& e : effects) {
            if (!literals_hold(m.interpretation(u), e.guard, sig))
                continue;
            if (applicable != nullptr)
                return UndefinedReason::conflicting_causes_laws;
            applicable = &e;
        }
        Interpretation pi = applicable != nullptr ? apply_literals(m.interpretation(u), applicable->effect, sig)
                                                  : m.interpretation(u);
        copy_of[u] = q.add_state(m.name(u) + suffix, std::move(pi));
        lambda.emplace(m.name(u) + suffix, m.name(u));
    }
    for (const auto& agent : alpha) {
        const std::size_t i = sig.require_agent(agent);
        for (std::size_t u = 0; u < m.size(); ++u) {
            if (copy_of[u] == m.size())
                continue;
            for (std::size_t v : m.successors(i, u))
                if (copy_of[v] != m.size())
                    q.add_arc(copy_of[u], i, copy_of[v]);
        }
    }

    KripkeStructure out = annotated_union(m, q, alpha, lambda);
    const std::size_t real = out.index_of(m.name(p.real) + suffix);
    return PointedStructure{std::move(out), real};
}

SuccessorResult succ(const PointedStructure& p, const lang::ActionInstance& a)
{
    switch (a.kind) {
    case lang::ActionKind::public_announcement:
        return succ_public(p, a.payload, a.pre);
    case lang::ActionKind::private_announcement:
        return succ_private(p, a.payload, a.performers, a.observers, a.pre);
    case lang::ActionKind::sensing:
        return succ_sense(p, a.sensed, a.performers, a.observers, a.pre);
    case lang::ActionKind::ontic:
        return succ_ontic(p, a.effects, a.performers, a.pre);
    }
    throw ArgumentError("unknown action kind");
}

SuccessorResult succ_seq(const PointedStructure& p, std::span<const lang::ActionInstance* const> actions)
{
    SuccessorResult current = p;
    for (const auto* a : actions) {
        current = succ(current.structure(), *a);
        if (!current.defined())
            return current;
    }
    return current;
}

} // namespace mak
