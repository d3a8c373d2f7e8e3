#include "mak/frame.hpp"

#include <algorithm>

namespace mak {

std::string_view to_string(FrameProperty p)
{
    switch (p) {
    case FrameProperty::reflexive:
        return "reflexivity";
    case FrameProperty::symmetric:
        return "symmetry";
    case FrameProperty::transitive:
        return "transitivity";
    case FrameProperty::euclidean:
        return "euclidean";
    case FrameProperty::serial:
        return "seriality";
    }
    return "?";
}

std::vector<FrameProperty> required_properties(FrameClass c)
{
    using P = FrameProperty;
    switch (c) {
    case FrameClass::none:
        return {};
    case FrameClass::r:
        return {P::reflexive};
    case FrameClass::rt:
        return {P::reflexive, P::transitive};
    case FrameClass::rst:
        return {P::reflexive, P::symmetric, P::transitive};
    case FrameClass::elt:
        return {P::transitive, P::euclidean, P::serial};
    }
    return {};
}

std::vector<FrameProperty> closure_properties(FrameClass c)
{
    auto props = required_properties(c);
    std::erase(props, FrameProperty::serial);
    return props;
}

namespace {

std::optional<std::vector<std::size_t>> find_violation(const KripkeStructure& m, std::size_t ag,
                                                       FrameProperty p)
{
    const std::size_t n = m.size();
    switch (p) {
    case FrameProperty::reflexive:
        for (std::size_t s = 0; s < n; ++s)
            if (!m.has_arc(s, ag, s))
                return std::vector<std::size_t>{s};
        break;
    case FrameProperty::serial:
        for (std::size_t s = 0; s < n; ++s)
            if (m.successors(ag, s).empty())
                return std::vector<std::size_t>{s};
        break;
    case FrameProperty::symmetric:
        for (std::size_t u = 0; u < n; ++u)
            for (std::size_t v : m.successors(ag, u))
                if (!m.has_arc(v, ag, u))
                    return std::vector<std::size_t>{u, v};
        break;
    case FrameProperty::transitive:
        for (std::size_t u = 0; u < n; ++u)
            for (std::size_t v : m.successors(ag, u))
                for (std::size_t w : m.successors(ag, v))
                    if (!m.has_arc(u, ag, w))
                        return std::vector<std::size_t>{u, v, w};
        break;
    case FrameProperty::euclidean:
        for (std::size_t u = 0; u < n; ++u)
            for (std::size_t v : m.successors(ag, u))
                for (std::size_t w : m.successors(ag, u))
                    if (!m.has_arc(v, ag, w))
                        return std::vector<std::size_t>{u, v, w};
        break;
    }
    return std::nullopt;
}

FrameReport report(const KripkeStructure& m, std::size_t ag, FrameProperty p,
                   const std::vector<std::size_t>& states)
{
    FrameViolation v{p, m.signature().agents()[ag], {}};
    for (std::size_t s : states)
        v.witness.push_back(m.name(s));
    return FrameReport{std::move(v)};
}

using Matrix = std::vector<std::vector<char>>;

void close_relation(Matrix& r, const std::vector<FrameProperty>& props)
{
    const std::size_t n = r.size();
    auto has = [&](FrameProperty p) { return std::find(props.begin(), props.end(), p) != props.end(); };
    if (has(FrameProperty::reflexive))
        for (std::size_t s = 0; s < n; ++s)
            r[s][s] = 1;
    const bool sym = has(FrameProperty::symmetric);
    const bool trans = has(FrameProperty::transitive);
    const bool eucl = has(FrameProperty::euclidean);
    if (sym && !eucl) {
        for (std::size_t u = 0; u < n; ++u)
            for (std::size_t v = 0; v < n; ++v)
                if (r[u][v])
                    r[v][u] = 1;
    }
    if (trans && !eucl) {
        // Warshall; symmetric input stays symmetric
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t u = 0; u < n; ++u)
                if (r[u][k])
                    for (std::size_t w = 0; w < n; ++w)
                        if (r[k][w])
                            r[u][w] = 1;
        return;
    }
    if (!eucl && !sym)
        return;
    bool changed = true;
    while (changed) {
        changed = false;
        auto add = [&](std::size_t a, std::size_t b) {
            if (!r[a][b]) {
                r[a][b] = 1;
                changed = true;
            }
        };
        for (std::size_t u = 0; u < n; ++u)
            for (std::size_t v = 0; v < n; ++v) {
                if (!r[u][v])
                    continue;
                if (sym)
                    add(v, u);
                for (std::size_t w = 0; w < n; ++w) {
                    if (trans && r[v][w])
                        add(u, w);
                    if (eucl && r[u][w])
                        add(v, w);
                }
            }
    }
}

} // namespace

FrameReport check_property(const KripkeStructure& m, FrameProperty p)
{
    for (std::size_t ag = 0; ag < m.agent_count(); ++ag)
        if (auto w = find_violation(m, ag, p))
            return report(m, ag, p, *w);
    return {};
}

FrameReport frame_check(const KripkeStructure& m, FrameClass c)
{
    for (FrameProperty p : required_properties(c))
        if (auto r = check_property(m, p); !r.passed())
            return r;
    return {};
}

KripkeStructure frame_closure(const KripkeStructure& m, FrameClass c)
{
    const auto props = closure_properties(c);
    KripkeStructure out = m;
    if (props.empty())
        return out;
    const std::size_t n = m.size();
    for (std::size_t ag = 0; ag < m.agent_count(); ++ag) {
        Matrix r(n, std::vector<char>(n, 0));
        for (std::size_t s = 0; s < n; ++s)
            for (std::size_t t : m.successors(ag, s))
                r[s][t] = 1;
        close_relation(r, props);
        for (std::size_t s = 0; s < n; ++s) {
            std::vector<std::size_t> succ;
            for (std::size_t t = 0; t < n; ++t)
                if (r[s][t])
                    succ.push_back(t);
            out.set_successors(ag, s, std::move(succ));
        }
    }
    return out;
}

} // namespace mak
