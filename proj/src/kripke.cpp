#include "mak/kripke.hpp"

#include "mak/errors.hpp"

#include <algorithm>
#include <cctype>

namespace mak {

Signature::Signature(std::vector<AgentId> agents, std::vector<FluentAtom> fluents)
    : agents_(std::move(agents)), fluents_(std::move(fluents))
{
    std::sort(agents_.begin(), agents_.end());
    agents_.erase(std::unique(agents_.begin(), agents_.end()), agents_.end());
    std::sort(fluents_.begin(), fluents_.end());
    fluents_.erase(std::unique(fluents_.begin(), fluents_.end()), fluents_.end());

    for (std::size_t i = 0; i < agents_.size(); ++i)
        agent_index_.emplace(agents_[i], i);
    for (std::size_t i = 0; i < fluents_.size(); ++i) {
        if (!fluents_[i].is_ground())
            throw ArgumentError("signature fluent is not ground: " + fluents_[i].to_string());
        fluent_index_.emplace(fluents_[i], i);
        if (!fluents_[i].args.empty())
            families_[fluents_[i].functor].push_back(i);
    }
}

std::optional<std::size_t> Signature::agent_index(std::string_view agent) const
{
    if (auto it = agent_index_.find(std::string(agent)); it != agent_index_.end())
        return it->second;
    return std::nullopt;
}

std::optional<std::size_t> Signature::fluent_index(const FluentAtom& fluent) const
{
    if (auto it = fluent_index_.find(fluent); it != fluent_index_.end())
        return it->second;
    return std::nullopt;
}

std::size_t Signature::require_agent(std::string_view agent) const
{
    if (auto i = agent_index(agent))
        return *i;
    throw DeclarationError("undeclared agent '" + std::string(agent) + "'");
}

std::size_t Signature::require_fluent(const FluentAtom& fluent) const
{
    if (auto i = fluent_index(fluent))
        return *i;
    throw DeclarationError("undeclared fluent '" + fluent.to_string() + "'");
}

const std::vector<std::size_t>* Signature::family(std::string_view functor) const
{
    if (auto it = families_.find(std::string(functor)); it != families_.end())
        return &it->second;
    return nullptr;
}

std::optional<FrameClass> frame_class_for_system(std::string_view system)
{
    std::string s;
    for (char c : system)
        s += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    if (s == "t")
        return FrameClass::r;
    if (s == "s4")
        return FrameClass::rt;
    if (s == "s5")
        return FrameClass::rst;
    if (s == "kd45")
        return FrameClass::elt;
    if (s == "none")
        return FrameClass::none;
    return std::nullopt;
}

std::string_view to_string(FrameClass c)
{
    switch (c) {
    case FrameClass::none:
        return "none";
    case FrameClass::r:
        return "r";
    case FrameClass::rt:
        return "rt";
    case FrameClass::rst:
        return "rst";
    case FrameClass::elt:
        return "elt";
    }
    return "?";
}

KripkeStructure::KripkeStructure(SignaturePtr signature)
    : signature_(std::move(signature)), succ_(signature_->agent_count())
{
}

std::optional<std::size_t> KripkeStructure::find(std::string_view name) const
{
    if (auto it = index_.find(std::string(name)); it != index_.end())
        return it->second;
    return std::nullopt;
}

std::size_t KripkeStructure::index_of(std::string_view name) const
{
    if (auto i = find(name))
        return *i;
    throw ArgumentError("unknown state '" + std::string(name) + "'");
}

bool KripkeStructure::has_arc(std::size_t from, std::size_t agent, std::size_t to) const
{
    const auto& s = succ_[agent][from];
    return std::binary_search(s.begin(), s.end(), to);
}

std::size_t KripkeStructure::arc_count() const
{
    std::size_t n = 0;
    for (const auto& rel : succ_)
        for (const auto& s : rel)
            n += s.size();
    return n;
}

std::size_t KripkeStructure::add_state(StateId name, Interpretation interp)
{
    if (interp.size() != signature_->fluent_count())
        throw ArgumentError("interpretation width does not match the signature");
    if (index_.count(name) != 0)
        throw ArgumentError("duplicate state '" + name + "'");
    const std::size_t id = names_.size();
    index_.emplace(name, id);
    names_.push_back(std::move(name));
    interp_.push_back(std::move(interp));
    for (auto& rel : succ_)
        rel.emplace_back();
    return id;
}

void KripkeStructure::add_arc(std::size_t from, std::size_t agent, std::size_t to)
{
    auto& s = succ_.at(agent).at(from);
    if (to >= names_.size())
        throw ArgumentError("arc target out of range");
    auto it = std::lower_bound(s.begin(), s.end(), to);
    if (it == s.end() || *it != to)
        s.insert(it, to);
}

void KripkeStructure::remove_arc(std::size_t from, std::size_t agent, std::size_t to)
{
    auto& s = succ_.at(agent).at(from);
    auto it = std::lower_bound(s.begin(), s.end(), to);
    if (it != s.end() && *it == to)
        s.erase(it);
}

void KripkeStructure::set_successors(std::size_t agent, std::size_t state, std::vector<std::size_t> targets)
{
    std::sort(targets.begin(), targets.end());
    targets.erase(std::unique(targets.begin(), targets.end()), targets.end());
    if (!targets.empty() && targets.back() >= names_.size())
        throw ArgumentError("arc target out of range");
    succ_.at(agent).at(state) = std::move(targets);
}

void KripkeStructure::clear_relation(std::size_t agent)
{
    for (auto& s : succ_.at(agent))
        s.clear();
}

bool operator==(const KripkeStructure& a, const KripkeStructure& b)
{
    if (a.size() != b.size() || !(a.signature() == b.signature()))
        return false;
    for (std::size_t s = 0; s < a.size(); ++s) {
        auto t = b.find(a.name(s));
        if (!t || !(a.interpretation(s) == b.interpretation(*t)))
            return false;
        for (std::size_t ag = 0; ag < a.agent_count(); ++ag) {
            const auto& sa = a.successors(ag, s);
            const auto& sb = b.successors(ag, *t);
            if (sa.size() != sb.size())
                return false;
            for (std::size_t v : sa)
                if (!b.has_arc(*t, ag, b.index_of(a.name(v))))
                    return false;
        }
    }
    return true;
}

} // namespace mak
