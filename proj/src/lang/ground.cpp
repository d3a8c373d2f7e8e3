#include "mak/lang/ground.hpp"

#include "mak/errors.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace mak::lang {

namespace {

std::vector<std::string> action_variables(const ActionTerm& t)
{
    std::vector<std::string> vars;
    for (const auto& a : t.args)
        if (a.is_variable() && std::find(vars.begin(), vars.end(), a.name()) == vars.end())
            vars.push_back(a.name());
    return vars;
}

std::vector<AgentId> bind_agents(const std::vector<AgentId>& agents, const std::map<std::string, Term>& b)
{
    std::set<AgentId> out;
    for (const auto& a : agents) {
        auto it = b.find(a);
        out.insert(it != b.end() ? it->second.to_string() : a);
    }
    return {out.begin(), out.end()};
}

std::vector<Literal> bind_literals(const std::vector<Literal>& lits, const std::map<std::string, Term>& b)
{
    std::vector<Literal> out;
    for (const auto& l : lits)
        out.push_back({Formula::atom(l.atom).substitute(b).fluent(), l.positive});
    return out;
}

ActionLaw instantiate(const ActionLaw& law, const std::map<std::string, Term>& b)
{
    ActionLaw g = law;
    g.action = law.action.substitute(b);
    g.condition = law.condition.substitute(b);
    g.payload = law.payload.substitute(b);
    g.effect = bind_literals(law.effect, b);
    g.guard = bind_literals(law.guard, b);
    if (!law.sensed.functor.empty())
        g.sensed = Formula::atom(law.sensed).substitute(b).fluent();
    g.performers = bind_agents(law.performers, b);
    g.observers = bind_agents(law.observers, b);
    std::erase_if(g.observers, [&](const AgentId& a) {
        return std::find(g.performers.begin(), g.performers.end(), a) != g.performers.end();
    });
    return g;
}

bool well_typed(const ActionLaw& g, const std::set<FluentAtom>& fluents, std::size_t agent_count)
{
    auto declared = [&](const Formula& f) {
        std::vector<FluentAtom> atoms;
        f.collect_atoms(atoms);
        return std::all_of(atoms.begin(), atoms.end(), [&](const FluentAtom& a) { return fluents.count(a) != 0; });
    };
    auto declared_lits = [&](const std::vector<Literal>& lits) {
        return std::all_of(lits.begin(), lits.end(), [&](const Literal& l) { return fluents.count(l.atom) != 0; });
    };
    switch (g.kind) {
    case LawKind::executable:
        return declared(g.condition);
    case LawKind::causes:
        return declared_lits(g.effect) && declared_lits(g.guard);
    case LawKind::announces: {
        if (!declared(g.payload))
            return false;
        const bool is_public = g.performers.size() == agent_count && g.observers.empty();
        return is_public || g.payload.is_literal();
    }
    case LawKind::determines:
        return fluents.count(g.sensed) != 0;
    }
    return false;
}

} // namespace

std::string_view to_string(ActionKind k)
{
    switch (k) {
    case ActionKind::public_announcement:
        return "public-announcement";
    case ActionKind::private_announcement:
        return "private-announcement";
    case ActionKind::sensing:
        return "sensing";
    case ActionKind::ontic:
        return "ontic";
    }
    return "?";
}

Domain ground(const Domain& d)
{
    Domain out = d;
    out.laws.clear();
    const std::set<FluentAtom> fluents(d.fluents.begin(), d.fluents.end());

    std::vector<ActionLaw> instances;
    std::set<ActionTerm> rejected;
    for (const auto& law : d.laws) {
        const auto vars = action_variables(law.action);
        const std::size_t n = d.agents.size();
        if (!vars.empty() && n == 0)
            continue;
        std::vector<std::size_t> odo(vars.size(), 0);
        for (;;) {
            std::map<std::string, Term> binding;
            for (std::size_t i = 0; i < vars.size(); ++i)
                binding.emplace(vars[i], Term::symbol(d.agents[odo[i]]));
            ActionLaw g = instantiate(law, binding);
            if (!well_typed(g, fluents, d.agents.size()))
                rejected.insert(g.action);
            instances.push_back(std::move(g));

            std::size_t i = vars.size();
            while (i > 0 && ++odo[i - 1] == n)
                odo[--i] = 0;
            if (i == 0)
                break;
        }
    }
    // an ill-typed law takes its whole ground action with it, so that no
    // action survives with only part of its laws
    for (auto& g : instances)
        if (rejected.count(g.action) == 0)
            out.laws.push_back(std::move(g));
    return out;
}

std::vector<ActionInstance> resolve_actions(const Domain& grounded)
{
    std::map<ActionTerm, std::vector<const ActionLaw*>> by_action;
    for (const auto& law : grounded.laws) {
        if (!law.action.is_ground())
            throw ArgumentError("resolve_actions needs a ground domain: " + law.action.to_string());
        by_action[law.action].push_back(&law);
    }
    const std::set<AgentId> all_agents(grounded.agents.begin(), grounded.agents.end());

    std::vector<ActionInstance> out;
    for (const auto& [term, laws] : by_action) {
        ActionInstance a;
        a.term = term;
        std::vector<Formula> pre;
        std::optional<LawKind> effect_kind;
        std::size_t effect_laws = 0;
        for (const ActionLaw* law : laws) {
            if (law->kind == LawKind::executable) {
                pre.push_back(law->condition);
                continue;
            }
            if (effect_kind && *effect_kind != law->kind)
                throw ArgumentError("action " + term.to_string() + " has laws of more than one kind");
            effect_kind = law->kind;
            ++effect_laws;
            const AgentSet performers(law->performers.begin(), law->performers.end());
            if (effect_laws > 1) {
                if (law->kind != LawKind::causes)
                    throw ArgumentError("action " + term.to_string() + " has more than one effect law");
                if (performers != a.performers)
                    throw ArgumentError("causes laws of " + term.to_string() + " disagree on performers");
            }
            a.performers = performers;
            a.observers = AgentSet(law->observers.begin(), law->observers.end());
            switch (law->kind) {
            case LawKind::causes:
                a.kind = ActionKind::ontic;
                a.effects.push_back({law->effect, law->guard});
                break;
            case LawKind::announces: {
                const bool is_public = std::set<AgentId>(law->performers.begin(), law->performers.end()) ==
                                           all_agents &&
                                       law->observers.empty();
                a.kind = is_public ? ActionKind::public_announcement : ActionKind::private_announcement;
                a.payload = law->payload;
                break;
            }
            case LawKind::determines:
                a.kind = ActionKind::sensing;
                a.sensed = law->sensed;
                break;
            case LawKind::executable:
                break;
            }
        }
        if (!effect_kind)
            continue;
        a.pre = pre.empty() ? Formula::top() : Formula::conjunction_of(pre);
        out.push_back(std::move(a));
    }
    return out;
}

const ActionInstance* GroundDomain::find(const ActionTerm& term) const
{
    auto it = std::lower_bound(actions.begin(), actions.end(), term,
                               [](const ActionInstance& a, const ActionTerm& t) { return a.term < t; });
    return it != actions.end() && it->term == term ? &*it : nullptr;
}

GroundDomain compile(const Domain& d)
{
    GroundDomain g;
    g.source = ground(d);
    g.signature = d.signature();
    g.frame = d.frame_class();
    g.actions = resolve_actions(g.source);
    return g;
}

} // namespace mak::lang
