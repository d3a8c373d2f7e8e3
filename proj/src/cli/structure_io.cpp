#include "mak/cli/structure_io.hpp"

#include "mak/errors.hpp"
#include "mak/lang/parser.hpp"

#include <sstream>
#include <tuple>
#include <vector>

namespace mak::cli {

PointedStructure StructureDocument::pointed() const
{
    if (!real)
        throw ArgumentError("the structure has no real state");
    return {structure, *real};
}

namespace {

FluentAtom parse_fluent(const std::string& token, std::size_t line)
{
    Formula f;
    try {
        f = lang::parse_formula(token);
    } catch (const ParseError& e) {
        throw ParseError(line, 1, "bad fluent '" + token + "'");
    }
    if (f.kind() != Formula::Kind::atom || !f.fluent().is_ground())
        throw ParseError(line, 1, "bad fluent '" + token + "'");
    return f.fluent();
}

} // namespace

StructureDocument read_structure(std::string_view text)
{
    std::vector<AgentId> agents;
    std::vector<FluentAtom> fluents;
    bool have_agents = false;
    bool have_fluents = false;
    std::vector<std::tuple<std::string, std::vector<FluentAtom>, std::size_t>> states;
    std::vector<std::tuple<std::string, std::string, std::string, std::size_t>> arcs;
    std::optional<std::pair<std::string, std::size_t>> real;

    std::istringstream in{std::string(text)};
    std::string raw;
    std::size_t line = 0;
    while (std::getline(in, raw)) {
        ++line;
        if (auto pct = raw.find('%'); pct != std::string::npos)
            raw.erase(pct);
        std::istringstream ls(raw);
        std::vector<std::string> tok;
        for (std::string t; ls >> t;)
            tok.push_back(t);
        if (tok.empty())
            continue;
        const std::string& kw = tok[0];
        if (kw == "agents") {
            if (have_agents)
                throw ParseError(line, 1, "duplicate agents record");
            have_agents = true;
            agents.assign(tok.begin() + 1, tok.end());
        } else if (kw == "fluents") {
            if (have_fluents)
                throw ParseError(line, 1, "duplicate fluents record");
            have_fluents = true;
            for (std::size_t i = 1; i < tok.size(); ++i)
                fluents.push_back(parse_fluent(tok[i], line));
        } else if (kw == "state") {
            if (tok.size() < 2)
                throw ParseError(line, 1, "state record needs a name");
            std::vector<FluentAtom> trues;
            for (std::size_t i = 2; i < tok.size(); ++i)
                trues.push_back(parse_fluent(tok[i], line));
            states.emplace_back(tok[1], std::move(trues), line);
        } else if (kw == "arc") {
            if (tok.size() != 4)
                throw ParseError(line, 1, "arc record is 'arc FROM AGENT TO'");
            arcs.emplace_back(tok[1], tok[2], tok[3], line);
        } else if (kw == "real") {
            if (tok.size() != 2)
                throw ParseError(line, 1, "real record is 'real STATE'");
            if (real)
                throw ParseError(line, 1, "duplicate real record");
            real.emplace(tok[1], line);
        } else {
            throw ParseError(line, 1, "unknown record '" + kw + "'");
        }
    }
    if (!have_agents || !have_fluents)
        throw ParseError(line, 1, "missing agents or fluents record");

    auto sig = std::make_shared<const Signature>(agents, fluents);
    if (sig->agent_count() != agents.size() || sig->fluent_count() != fluents.size())
        throw ParseError(1, 1, "duplicate agent or fluent in header");
    StructureDocument doc{KripkeStructure(sig), std::nullopt};
    for (const auto& [name, trues, at] : states) {
        Interpretation pi(sig->fluent_count());
        for (const auto& f : trues) {
            auto i = sig->fluent_index(f);
            if (!i)
                throw ParseError(at, 1, "fluent '" + f.to_string() + "' is not in the header");
            pi.set(*i, true);
        }
        if (doc.structure.find(name))
            throw ParseError(at, 1, "duplicate state '" + name + "'");
        doc.structure.add_state(name, std::move(pi));
    }
    for (const auto& [from, agent, to, at] : arcs) {
        auto u = doc.structure.find(from);
        auto v = doc.structure.find(to);
        auto a = sig->agent_index(agent);
        if (!u || !v)
            throw ParseError(at, 1, "arc between unknown states");
        if (!a)
            throw ParseError(at, 1, "arc for unknown agent '" + agent + "'");
        doc.structure.add_arc(*u, *a, *v);
    }
    if (real) {
        auto r = doc.structure.find(real->first);
        if (!r)
            throw ParseError(real->second, 1, "real state '" + real->first + "' is not a state");
        doc.real = *r;
    }
    return doc;
}

std::string write_structure(const KripkeStructure& m, std::optional<std::size_t> real)
{
    const Signature& sig = m.signature();
    std::string out = "agents";
    for (const auto& a : sig.agents())
        out += " " + a;
    out += "\nfluents";
    for (const auto& f : sig.fluents())
        out += " " + f.to_string();
    out += "\n";
    for (std::size_t s = 0; s < m.size(); ++s) {
        out += "state " + m.name(s);
        for (std::size_t f = 0; f < sig.fluent_count(); ++f)
            if (m.value(s, f))
                out += " " + sig.fluents()[f].to_string();
        out += "\n";
    }
    for (std::size_t s = 0; s < m.size(); ++s)
        for (std::size_t a = 0; a < m.agent_count(); ++a)
            for (std::size_t t : m.successors(a, s))
                out += "arc " + m.name(s) + " " + sig.agents()[a] + " " + m.name(t) + "\n";
    if (real)
        out += "real " + m.name(*real) + "\n";
    return out;
}

std::string write_structure(const PointedStructure& p)
{
    return write_structure(p.structure, p.real);
}

} // namespace mak::cli
