#include "mak/formula.hpp"

#include "mak/errors.hpp"

#include <algorithm>

namespace mak {

struct Formula::Node {
    Kind kind = Kind::top;
    std::vector<Formula> children;
    FluentAtom fluent;
    std::vector<AgentId> agents;  // one entry for knows / knows_value
    std::string family;
};

namespace {

std::vector<AgentId> normalise_group(std::vector<AgentId> group)
{
    if (group.empty())
        throw ArgumentError("agent group of E/C operator must be nonempty");
    std::sort(group.begin(), group.end());
    group.erase(std::unique(group.begin(), group.end()), group.end());
    return group;
}

// Binding strength used by the printer.
int precedence(Formula::Kind k)
{
    switch (k) {
    case Formula::Kind::implication:
        return 1;
    case Formula::Kind::disjunction:
        return 2;
    case Formula::Kind::conjunction:
        return 3;
    default:
        return 4;
    }
}

std::string join_group(const std::vector<AgentId>& group)
{
    std::string out = "[";
    for (std::size_t i = 0; i < group.size(); ++i) {
        if (i > 0)
            out += ',';
        out += group[i];
    }
    return out + "]";
}

} // namespace

Formula::Formula() : Formula(top()) {}

Formula Formula::top()
{
    static const Formula t{std::make_shared<const Node>(Node{Kind::top, {}, {}, {}, {}})};
    return t;
}

Formula Formula::bottom()
{
    static const Formula f{std::make_shared<const Node>(Node{Kind::bottom, {}, {}, {}, {}})};
    return f;
}

Formula Formula::atom(FluentAtom fluent)
{
    return Formula{std::make_shared<const Node>(Node{Kind::atom, {}, std::move(fluent), {}, {}})};
}

Formula Formula::negation(Formula f)
{
    return Formula{std::make_shared<const Node>(Node{Kind::negation, {std::move(f)}, {}, {}, {}})};
}

Formula Formula::conjunction(Formula lhs, Formula rhs)
{
    return Formula{std::make_shared<const Node>(
        Node{Kind::conjunction, {std::move(lhs), std::move(rhs)}, {}, {}, {}})};
}

Formula Formula::disjunction(Formula lhs, Formula rhs)
{
    return Formula{std::make_shared<const Node>(
        Node{Kind::disjunction, {std::move(lhs), std::move(rhs)}, {}, {}, {}})};
}

Formula Formula::implication(Formula lhs, Formula rhs)
{
    return Formula{std::make_shared<const Node>(
        Node{Kind::implication, {std::move(lhs), std::move(rhs)}, {}, {}, {}})};
}

Formula Formula::knows(AgentId agent, Formula f)
{
    return Formula{
        std::make_shared<const Node>(Node{Kind::knows, {std::move(f)}, {}, {std::move(agent)}, {}})};
}

Formula Formula::everyone(std::vector<AgentId> group, Formula f)
{
    return Formula{std::make_shared<const Node>(
        Node{Kind::everyone, {std::move(f)}, {}, normalise_group(std::move(group)), {}})};
}

Formula Formula::common(std::vector<AgentId> group, Formula f)
{
    return Formula{std::make_shared<const Node>(
        Node{Kind::common, {std::move(f)}, {}, normalise_group(std::move(group)), {}})};
}

Formula Formula::knows_value(AgentId agent, std::string family)
{
    return Formula{std::make_shared<const Node>(
        Node{Kind::knows_value, {}, {}, {std::move(agent)}, std::move(family)})};
}

Formula Formula::conjunction_of(const std::vector<Formula>& parts)
{
    if (parts.empty())
        return top();
    Formula out = parts.front();
    for (std::size_t i = 1; i < parts.size(); ++i)
        out = conjunction(out, parts[i]);
    return out;
}

Formula Formula::disjunction_of(const std::vector<Formula>& parts)
{
    if (parts.empty())
        return bottom();
    Formula out = parts.front();
    for (std::size_t i = 1; i < parts.size(); ++i)
        out = disjunction(out, parts[i]);
    return out;
}

Formula::Kind Formula::kind() const { return node_->kind; }
const Formula& Formula::operand() const { return node_->children.at(0); }
const Formula& Formula::lhs() const { return node_->children.at(0); }
const Formula& Formula::rhs() const { return node_->children.at(1); }
const FluentAtom& Formula::fluent() const { return node_->fluent; }
const AgentId& Formula::agent() const { return node_->agents.at(0); }
const std::vector<AgentId>& Formula::group() const { return node_->agents; }
const std::string& Formula::family() const { return node_->family; }

bool Formula::is_fluent_formula() const
{
    switch (kind()) {
    case Kind::knows:
    case Kind::everyone:
    case Kind::common:
    case Kind::knows_value:
        return false;
    default:
        return std::all_of(node_->children.begin(), node_->children.end(),
                           [](const Formula& c) { return c.is_fluent_formula(); });
    }
}

bool Formula::is_literal() const
{
    return kind() == Kind::atom || (kind() == Kind::negation && operand().kind() == Kind::atom);
}

std::size_t Formula::depth() const
{
    std::size_t d = 0;
    for (const auto& c : node_->children)
        d = std::max(d, c.depth() + 1);
    return d;
}

Formula Formula::substitute(const std::map<std::string, Term>& binding) const
{
    auto sub_agent = [&](const AgentId& a) -> AgentId {
        if (auto it = binding.find(a); it != binding.end())
            return it->second.to_string();
        return a;
    };
    switch (kind()) {
    case Kind::top:
    case Kind::bottom:
        return *this;
    case Kind::atom: {
        FluentAtom f = fluent();
        for (auto& t : f.args)
            if (t.is_variable())
                if (auto it = binding.find(t.name()); it != binding.end())
                    t = it->second;
        return atom(std::move(f));
    }
    case Kind::negation:
        return negation(operand().substitute(binding));
    case Kind::conjunction:
        return conjunction(lhs().substitute(binding), rhs().substitute(binding));
    case Kind::disjunction:
        return disjunction(lhs().substitute(binding), rhs().substitute(binding));
    case Kind::implication:
        return implication(lhs().substitute(binding), rhs().substitute(binding));
    case Kind::knows:
        return knows(sub_agent(agent()), operand().substitute(binding));
    case Kind::everyone:
    case Kind::common: {
        std::vector<AgentId> g;
        for (const auto& a : group())
            g.push_back(sub_agent(a));
        return kind() == Kind::everyone ? everyone(std::move(g), operand().substitute(binding))
                                        : common(std::move(g), operand().substitute(binding));
    }
    case Kind::knows_value:
        return knows_value(sub_agent(agent()), family());
    }
    return *this;
}

void Formula::collect_atoms(std::vector<FluentAtom>& out) const
{
    if (kind() == Kind::atom)
        out.push_back(fluent());
    for (const auto& c : node_->children)
        c.collect_atoms(out);
}

void Formula::collect_agents(std::vector<AgentId>& out) const
{
    out.insert(out.end(), node_->agents.begin(), node_->agents.end());
    for (const auto& c : node_->children)
        c.collect_agents(out);
}

std::string Formula::to_string() const
{
    auto wrap = [](const Formula& f, bool parens) {
        return parens ? "(" + f.to_string() + ")" : f.to_string();
    };
    const int own = precedence(kind());
    switch (kind()) {
    case Kind::top:
        return "true";
    case Kind::bottom:
        return "false";
    case Kind::atom:
        return fluent().to_string();
    case Kind::negation:
        return "~" + wrap(operand(), precedence(operand().kind()) < 4);
    case Kind::conjunction:
    case Kind::disjunction: {
        // left-associative: only the right operand needs parentheses at equal strength
        const char* op = kind() == Kind::conjunction ? " & " : " | ";
        return wrap(lhs(), precedence(lhs().kind()) < own) + op +
               wrap(rhs(), precedence(rhs().kind()) <= own);
    }
    case Kind::implication:
        return wrap(lhs(), precedence(lhs().kind()) <= own) + " -> " +
               wrap(rhs(), precedence(rhs().kind()) < own);
    case Kind::knows:
        return "k(" + agent() + ", " + operand().to_string() + ")";
    case Kind::everyone:
        return "e(" + join_group(group()) + ", " + operand().to_string() + ")";
    case Kind::common:
        return "c(" + join_group(group()) + ", " + operand().to_string() + ")";
    case Kind::knows_value:
        return "kv(" + agent() + ", " + family() + ")";
    }
    return {};
}

bool operator==(const Formula& a, const Formula& b)
{
    if (a.node_ == b.node_)
        return true;
    const auto& x = *a.node_;
    const auto& y = *b.node_;
    return x.kind == y.kind && x.fluent == y.fluent && x.agents == y.agents &&
           x.family == y.family && x.children == y.children;
}

} // namespace mak
