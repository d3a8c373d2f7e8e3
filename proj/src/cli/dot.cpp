#include "mak/cli/dot.hpp"

#include <algorithm>
#include <numeric>
#include <tuple>
#include <vector>

namespace mak::cli {

namespace {

std::string escaped(const std::string& s)
{
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\')
            out += '\\';
        out += c;
    }
    return out;
}

std::string quoted(const std::string& s)
{
    return "\"" + escaped(s) + "\"";
}

} // namespace

std::string to_dot(const KripkeStructure& m, std::optional<std::size_t> real)
{
    const Signature& sig = m.signature();
    std::vector<std::size_t> order(m.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return m.name(a) < m.name(b); });

    std::string out = "digraph kripke {\n";
    for (std::size_t s : order) {
        std::string label = escaped(m.name(s));
        std::string fluents;
        for (std::size_t f = 0; f < sig.fluent_count(); ++f)
            if (m.value(s, f))
                fluents += (fluents.empty() ? "" : " ") + escaped(sig.fluents()[f].to_string());
        if (!fluents.empty())
            label += "\\n" + fluents;  // graphviz line break
        const std::string shape = real && *real == s ? "doublecircle" : "circle";
        out += "  " + quoted(m.name(s)) + " [shape=" + shape + ", label=\"" + label + "\"];\n";
    }

    std::vector<std::tuple<const std::string*, const std::string*, const std::string*>> edges;
    for (std::size_t s = 0; s < m.size(); ++s)
        for (std::size_t a = 0; a < m.agent_count(); ++a)
            for (std::size_t t : m.successors(a, s))
                edges.emplace_back(&m.name(s), &m.name(t), &sig.agents()[a]);
    std::sort(edges.begin(), edges.end(), [](const auto& x, const auto& y) {
        return std::tie(*std::get<0>(x), *std::get<1>(x), *std::get<2>(x)) <
               std::tie(*std::get<0>(y), *std::get<1>(y), *std::get<2>(y));
    });
    for (const auto& [from, to, agent] : edges)
        out += "  " + quoted(*from) + " -> " + quoted(*to) + " [label=" + quoted(*agent) + "];\n";
    return out + "}\n";
}

std::string to_dot(const PointedStructure& p)
{
    return to_dot(p.structure, p.real);
}

} // namespace mak::cli
