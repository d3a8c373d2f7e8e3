#include "mak/transform.hpp"

#include "mak/errors.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <string>

namespace mak {

namespace {

void require_same_signature(const KripkeStructure& a, const KripkeStructure& b)
{
    if (!(a.signature() == b.signature()))
        throw ArgumentError("structures are built over different signatures");
}

std::vector<std::size_t> agent_indices(const Signature& sig, const AgentSet& agents)
{
    std::vector<std::size_t> out;
    for (const auto& a : agents) {
        auto i = sig.agent_index(a);
        if (!i)
            throw ArgumentError("unknown agent '" + a + "'");
        out.push_back(*i);
    }
    return out;
}

} // namespace

KripkeStructure state_remove(const KripkeStructure& m, const std::vector<char>& drop)
{
    if (drop.size() != m.size())
        throw ArgumentError("removal mask has the wrong size");
    KripkeStructure out(m.signature_ptr());
    std::vector<std::size_t> renumber(m.size(), 0);
    for (std::size_t s = 0; s < m.size(); ++s)
        if (!drop[s])
            renumber[s] = out.add_state(m.name(s), m.interpretation(s));
    for (std::size_t ag = 0; ag < m.agent_count(); ++ag)
        for (std::size_t s = 0; s < m.size(); ++s) {
            if (drop[s])
                continue;
            std::vector<std::size_t> succ;
            for (std::size_t t : m.successors(ag, s))
                if (!drop[t])
                    succ.push_back(renumber[t]);
            out.set_successors(ag, renumber[s], std::move(succ));
        }
    return out;
}

KripkeStructure state_remove(const KripkeStructure& m, const std::set<StateId>& removed)
{
    std::vector<char> drop(m.size(), 0);
    for (const auto& name : removed) {
        auto s = m.find(name);
        if (!s)
            throw ArgumentError("state_remove: '" + name + "' is not a state of the structure");
        drop[*s] = 1;
    }
    return state_remove(m, drop);
}

KripkeStructure arc_remove(const KripkeStructure& m, const std::vector<ArcTriple>& arcs)
{
    KripkeStructure out = m;
    for (const auto& arc : arcs) {
        auto u = m.find(arc.from);
        auto v = m.find(arc.to);
        auto ag = m.signature().agent_index(arc.agent);
        if (u && v && ag)
            out.remove_arc(*u, *ag, *v);
    }
    return out;
}

unsigned next_epoch(const KripkeStructure& m)
{
    unsigned highest = 0;
    for (const auto& name : m.names()) {
        const auto pos = name.rfind('#');
        if (pos == std::string::npos || pos + 1 == name.size())
            continue;
        const std::string digits = name.substr(pos + 1);
        if (!std::all_of(digits.begin(), digits.end(),
                         [](char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }))
            continue;
        highest = std::max(highest, static_cast<unsigned>(std::stoul(digits)));
    }
    return highest + 1;
}

Replica replica(const KripkeStructure& m, std::optional<unsigned> epoch)
{
    const std::string suffix = "#" + std::to_string(epoch.value_or(next_epoch(m)));
    Replica r{KripkeStructure(m.signature_ptr()), {}};
    for (std::size_t s = 0; s < m.size(); ++s) {
        r.structure.add_state(m.name(s) + suffix, m.interpretation(s));
        r.map.emplace(m.name(s), m.name(s) + suffix);
    }
    // copies are added in the same order, so indices carry over
    for (std::size_t ag = 0; ag < m.agent_count(); ++ag)
        for (std::size_t s = 0; s < m.size(); ++s)
            r.structure.set_successors(ag, s, m.successors(ag, s));
    return r;
}

bool c_equivalent(const KripkeStructure& m1, const KripkeStructure& m2, const RenamingMap& c)
{
    if (!(m1.signature() == m2.signature()) || m1.size() != m2.size() || c.size() != m1.size())
        return false;
    std::vector<std::size_t> image(m1.size());
    std::vector<char> hit(m2.size(), 0);
    for (std::size_t s = 0; s < m1.size(); ++s) {
        auto it = c.find(m1.name(s));
        if (it == c.end())
            return false;
        auto t = m2.find(it->second);
        if (!t || hit[*t])
            return false;
        hit[*t] = 1;
        image[s] = *t;
    }
    for (std::size_t s = 0; s < m1.size(); ++s) {
        if (!(m1.interpretation(s) == m2.interpretation(image[s])))
            return false;
        for (std::size_t ag = 0; ag < m1.agent_count(); ++ag) {
            const auto& succ = m1.successors(ag, s);
            if (succ.size() != m2.successors(ag, image[s]).size())
                return false;
            for (std::size_t t : succ)
                if (!m2.has_arc(image[s], ag, image[t]))
                    return false;
        }
    }
    return true;
}

namespace {

std::optional<RenamingMap> search_equivalence(const KripkeStructure& m1, const KripkeStructure& m2,
                                              std::optional<std::pair<std::size_t, std::size_t>> fixed)
{
    if (!(m1.signature() == m2.signature()) || m1.size() != m2.size())
        return std::nullopt;
    const std::size_t n = m1.size();
    const std::size_t agents = m1.agent_count();
    auto signature_of = [&](const KripkeStructure& m, std::size_t s) {
        std::vector<std::size_t> degrees;
        for (std::size_t ag = 0; ag < agents; ++ag)
            degrees.push_back(m.successors(ag, s).size());
        return degrees;
    };
    auto locally_alike = [&](std::size_t u, std::size_t v) {
        return m1.interpretation(u) == m2.interpretation(v) && signature_of(m1, u) == signature_of(m2, v);
    };

    std::vector<std::size_t> image(n, n);
    std::vector<char> used(n, 0);
    auto consistent = [&](std::size_t u, std::size_t v) {
        for (std::size_t w = 0; w < n; ++w) {
            if (image[w] == n)
                continue;
            for (std::size_t ag = 0; ag < agents; ++ag)
                if (m1.has_arc(u, ag, w) != m2.has_arc(v, ag, image[w]) ||
                    m1.has_arc(w, ag, u) != m2.has_arc(image[w], ag, v))
                    return false;
        }
        for (std::size_t ag = 0; ag < agents; ++ag)
            if (m1.has_arc(u, ag, u) != m2.has_arc(v, ag, v))
                return false;
        return true;
    };
    auto assign = [&](std::size_t u, std::size_t v) {
        image[u] = v;
        used[v] = 1;
    };
    auto unassign = [&](std::size_t u) {
        used[image[u]] = 0;
        image[u] = n;
    };

    if (fixed) {
        if (!locally_alike(fixed->first, fixed->second) || !consistent(fixed->first, fixed->second))
            return std::nullopt;
        assign(fixed->first, fixed->second);
    }

    std::function<bool(std::size_t)> extend = [&](std::size_t u) -> bool {
        if (u == n)
            return true;
        if (image[u] != n)
            return extend(u + 1);
        for (std::size_t v = 0; v < n; ++v) {
            if (used[v] || !locally_alike(u, v) || !consistent(u, v))
                continue;
            assign(u, v);
            if (extend(u + 1))
                return true;
            unassign(u);
        }
        return false;
    };
    if (!extend(0))
        return std::nullopt;
    RenamingMap out;
    for (std::size_t u = 0; u < n; ++u)
        out.emplace(m1.name(u), m2.name(image[u]));
    return out;
}

} // namespace

std::optional<RenamingMap> find_equivalence(const KripkeStructure& m1, const KripkeStructure& m2)
{
    return search_equivalence(m1, m2, std::nullopt);
}

std::optional<RenamingMap> find_equivalence(const PointedStructure& p1, const PointedStructure& p2)
{
    return search_equivalence(p1.structure, p2.structure, std::pair{p1.real, p2.real});
}

bool compatible(const KripkeStructure& m1, const KripkeStructure& m2)
{
    if (!(m1.signature() == m2.signature()))
        return false;
    for (std::size_t s = 0; s < m1.size(); ++s)
        if (auto t = m2.find(m1.name(s)); t && !(m1.interpretation(s) == m2.interpretation(*t)))
            return false;
    return true;
}

KripkeStructure kappa_union(const KripkeStructure& m1, const KripkeStructure& m2)
{
    require_same_signature(m1, m2);
    if (!compatible(m1, m2))
        throw ArgumentError("kappa_union: structures disagree on a shared state");
    KripkeStructure out = m1;
    std::vector<std::size_t> position(m2.size());
    for (std::size_t s = 0; s < m2.size(); ++s) {
        auto existing = out.find(m2.name(s));
        position[s] = existing ? *existing : out.add_state(m2.name(s), m2.interpretation(s));
    }
    for (std::size_t ag = 0; ag < m2.agent_count(); ++ag)
        for (std::size_t s = 0; s < m2.size(); ++s)
            for (std::size_t t : m2.successors(ag, s))
                out.add_arc(position[s], ag, position[t]);
    return out;
}

KripkeStructure annotated_union(const KripkeStructure& m1, const KripkeStructure& m2, const AgentSet& aware,
                                const RenamingMap& lambda)
{
    require_same_signature(m1, m2);
    for (const auto& name : m2.names())
        if (m1.find(name))
            throw ArgumentError("annotated_union: state '" + name + "' occurs in both structures");
    if (lambda.size() != m2.size())
        throw ArgumentError("annotated_union: lambda must be total on the second structure");
    std::vector<std::size_t> target(m2.size());
    std::vector<char> hit(m1.size(), 0);
    for (std::size_t u = 0; u < m2.size(); ++u) {
        auto it = lambda.find(m2.name(u));
        if (it == lambda.end())
            throw ArgumentError("annotated_union: lambda undefined on '" + m2.name(u) + "'");
        auto v = m1.find(it->second);
        if (!v)
            throw ArgumentError("annotated_union: lambda image '" + it->second + "' is not in the first structure");
        if (hit[*v])
            throw ArgumentError("annotated_union: lambda is not injective");
        hit[*v] = 1;
        target[u] = *v;
    }
    const auto aware_idx = agent_indices(m1.signature(), aware);

    KripkeStructure out = kappa_union(m1, m2);
    const std::size_t offset = m1.size();  // m2's states follow m1's in the union
    for (std::size_t ag = 0; ag < m1.agent_count(); ++ag) {
        if (std::find(aware_idx.begin(), aware_idx.end(), ag) != aware_idx.end())
            continue;
        for (std::size_t u = 0; u < m2.size(); ++u)
            for (std::size_t v : m1.successors(ag, target[u]))
                out.add_arc(offset + u, ag, v);
    }
    return out;
}

KripkeStructure restriction(const KripkeStructure& m, const AgentSet& agents)
{
    KripkeStructure out = m;
    for (std::size_t ag : agent_indices(m.signature(), agents))
        out.clear_relation(ag);
    return out;
}

PointedStructure restriction(const PointedStructure& p, const AgentSet& agents)
{
    return PointedStructure{restriction(p.structure, agents), p.real};
}

} // namespace mak
