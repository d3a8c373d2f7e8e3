#include "mak/kernels.hpp"

#include "mak/errors.hpp"

#include <algorithm>
#include <unordered_map>

namespace mak::kernels {
namespace {

using Index = std::int64_t;

template <bool Parallel>
class Labeler {
public:
    explicit Labeler(const KripkeStructure& m) : m_(m), n_(static_cast<Index>(m.size())) {}

    const StateLabels& label(const Formula& f)
    {
        if (auto it = memo_.find(f.id()); it != memo_.end())
            return it->second;
        StateLabels out = compute(f);
        return memo_.emplace(f.id(), std::move(out)).first->second;
    }

private:
    template <class Fn>
    void for_states(Fn&& fn) const
    {
        if constexpr (Parallel) {
#pragma omp parallel for schedule(static)
            for (Index s = 0; s < n_; ++s)
                fn(static_cast<std::size_t>(s));
        } else {
            for (Index s = 0; s < n_; ++s)
                fn(static_cast<std::size_t>(s));
        }
    }

    bool all_successors(std::size_t agent, std::size_t s, const StateLabels& inner) const
    {
        for (std::size_t t : m_.successors(agent, s))
            if (!inner[t])
                return false;
        return true;
    }

    StateLabels compute(const Formula& f)
    {
        const Signature& sig = m_.signature();
        StateLabels out(m_.size(), 0);
        switch (f.kind()) {
        case Formula::Kind::top:
            std::fill(out.begin(), out.end(), 1);
            break;
        case Formula::Kind::bottom:
            break;
        case Formula::Kind::atom: {
            const std::size_t fluent = sig.require_fluent(f.fluent());
            for_states([&](std::size_t s) { out[s] = m_.value(s, fluent) ? 1 : 0; });
            break;
        }
        case Formula::Kind::negation: {
            const auto& a = label(f.operand());
            for_states([&](std::size_t s) { out[s] = a[s] ? 0 : 1; });
            break;
        }
        case Formula::Kind::conjunction: {
            const auto& a = label(f.lhs());
            const auto& b = label(f.rhs());
            for_states([&](std::size_t s) { out[s] = (a[s] && b[s]) ? 1 : 0; });
            break;
        }
        case Formula::Kind::disjunction: {
            const auto& a = label(f.lhs());
            const auto& b = label(f.rhs());
            for_states([&](std::size_t s) { out[s] = (a[s] || b[s]) ? 1 : 0; });
            break;
        }
        case Formula::Kind::implication: {
            const auto& a = label(f.lhs());
            const auto& b = label(f.rhs());
            for_states([&](std::size_t s) { out[s] = (!a[s] || b[s]) ? 1 : 0; });
            break;
        }
        case Formula::Kind::knows: {
            const std::size_t agent = sig.require_agent(f.agent());
            const auto& a = label(f.operand());
            for_states([&](std::size_t s) { out[s] = all_successors(agent, s, a) ? 1 : 0; });
            break;
        }
        case Formula::Kind::everyone: {
            std::vector<std::size_t> agents;
            for (const auto& g : f.group())
                agents.push_back(sig.require_agent(g));
            const auto& a = label(f.operand());
            for_states([&](std::size_t s) {
                out[s] = std::all_of(agents.begin(), agents.end(),
                                     [&](std::size_t ag) { return all_successors(ag, s, a); })
                             ? 1
                             : 0;
            });
            break;
        }
        case Formula::Kind::common: {
            std::vector<std::size_t> agents;
            for (const auto& g : f.group())
                agents.push_back(sig.require_agent(g));
            out = common(agents, label(f.operand()));
            break;
        }
        case Formula::Kind::knows_value: {
            const std::size_t agent = sig.require_agent(f.agent());
            const auto* family = sig.family(f.family());
            if (family == nullptr)
                throw DeclarationError("undeclared fluent family '" + f.family() + "'");
            for_states([&](std::size_t s) {
                const auto& succ = m_.successors(agent, s);
                if (succ.empty()) {
                    out[s] = family->empty() ? 0 : 1;
                    return;
                }
                for (std::size_t fluent : *family) {
                    if (!m_.value(succ.front(), fluent))
                        continue;
                    if (std::all_of(succ.begin(), succ.end(),
                                    [&](std::size_t t) { return m_.value(t, fluent); })) {
                        out[s] = 1;
                        return;
                    }
                }
            });
            break;
        }
        }
        return out;
    }

    // C_group(phi) holds at s iff no state violating phi is reachable from s
    // by a nonempty path of group-labeled arcs.
    StateLabels common(const std::vector<std::size_t>& agents, const StateLabels& inner) const
    {
        const std::size_t n = m_.size();
        std::vector<char> reach(n, 0);
        if constexpr (Parallel) {
            std::vector<char> next(n, 0);
            bool changed = true;
            while (changed) {
                changed = false;
#pragma omp parallel for schedule(static) reduction(|| : changed)
                for (Index si = 0; si < n_; ++si) {
                    const auto s = static_cast<std::size_t>(si);
                    char r = reach[s];
                    for (std::size_t k = 0; !r && k < agents.size(); ++k)
                        for (std::size_t t : m_.successors(agents[k], s))
                            if (!inner[t] || reach[t]) {
                                r = 1;
                                break;
                            }
                    next[s] = r;
                    if (r && !reach[s])
                        changed = true;
                }
                reach.swap(next);
            }
        } else {
            std::vector<std::vector<std::size_t>> pred(n);
            for (std::size_t ag : agents)
                for (std::size_t s = 0; s < n; ++s)
                    for (std::size_t t : m_.successors(ag, s))
                        pred[t].push_back(s);
            std::vector<std::size_t> work;
            auto mark = [&](std::size_t s) {
                if (!reach[s]) {
                    reach[s] = 1;
                    work.push_back(s);
                }
            };
            for (std::size_t t = 0; t < n; ++t)
                if (!inner[t])
                    for (std::size_t s : pred[t])
                        mark(s);
            while (!work.empty()) {
                const std::size_t s = work.back();
                work.pop_back();
                for (std::size_t p : pred[s])
                    mark(p);
            }
        }
        StateLabels out(n, 0);
        for (std::size_t s = 0; s < n; ++s)
            out[s] = reach[s] ? 0 : 1;
        return out;
    }

    const KripkeStructure& m_;
    Index n_;
    std::unordered_map<const void*, StateLabels> memo_;
};

} // namespace

StateLabels label_serial(const KripkeStructure& m, const Formula& f)
{
    Labeler<false> labeler(m);
    return labeler.label(f);
}

StateLabels label_parallel(const KripkeStructure& m, const Formula& f)
{
    Labeler<true> labeler(m);
    return labeler.label(f);
}

Adjacency equal_key_successors_serial(std::span<const std::int64_t> keys)
{
    Adjacency succ(keys.size());
    for (std::size_t s = 0; s < keys.size(); ++s)
        for (std::size_t t = 0; t < keys.size(); ++t)
            if (keys[s] == keys[t])
                succ[s].push_back(t);
    return succ;
}

Adjacency equal_key_successors_parallel(std::span<const std::int64_t> keys)
{
    std::unordered_map<std::int64_t, std::vector<std::size_t>> cells;
    for (std::size_t s = 0; s < keys.size(); ++s)
        cells[keys[s]].push_back(s);
    Adjacency succ(keys.size());
    const auto n = static_cast<Index>(keys.size());
#pragma omp parallel for schedule(static)
    for (Index s = 0; s < n; ++s)
        succ[static_cast<std::size_t>(s)] = cells.find(keys[static_cast<std::size_t>(s)])->second;
    return succ;
}

} // namespace mak::kernels
