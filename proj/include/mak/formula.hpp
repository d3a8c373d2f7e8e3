#pragma once

#include "mak/term.hpp"

#include <map>
#include <memory>
#include <string>
#include <vector>

namespace mak {

/// Immutable modal-epistemic formula. Nodes are shared, so copying is cheap
/// and node identity (`id()`) can key per-evaluation memo tables.
class Formula {
public:
    enum class Kind {
        top,
        bottom,
        atom,
        negation,
        conjunction,
        disjunction,
        implication,
        knows,
        everyone,
        common,
        knows_value,
    };

    Formula();  // true

    static Formula top();
    static Formula bottom();
    static Formula atom(FluentAtom fluent);
    static Formula negation(Formula f);
    static Formula conjunction(Formula lhs, Formula rhs);
    static Formula disjunction(Formula lhs, Formula rhs);
    static Formula implication(Formula lhs, Formula rhs);
    static Formula knows(AgentId agent, Formula f);
    static Formula everyone(std::vector<AgentId> group, Formula f);
    static Formula common(std::vector<AgentId> group, Formula f);
    static Formula knows_value(AgentId agent, std::string family);

    /// Left-nested conjunction; `true` for an empty list.
    static Formula conjunction_of(const std::vector<Formula>& parts);
    /// Left-nested disjunction; `false` for an empty list.
    static Formula disjunction_of(const std::vector<Formula>& parts);

    [[nodiscard]] Kind kind() const;
    [[nodiscard]] const Formula& operand() const;  // negation and modal operators
    [[nodiscard]] const Formula& lhs() const;
    [[nodiscard]] const Formula& rhs() const;
    [[nodiscard]] const FluentAtom& fluent() const;
    [[nodiscard]] const AgentId& agent() const;               // knows, knows_value
    [[nodiscard]] const std::vector<AgentId>& group() const;  // everyone, common (sorted, unique)
    [[nodiscard]] const std::string& family() const;          // knows_value

    [[nodiscard]] const void* id() const { return node_.get(); }

    /// No modal operators anywhere in the tree.
    [[nodiscard]] bool is_fluent_formula() const;
    /// `f` or `~f`.
    [[nodiscard]] bool is_literal() const;
    /// Operator nesting depth; atoms and constants have depth 0.
    [[nodiscard]] std::size_t depth() const;

    /// Replace schema variables (in fluent arguments and agent positions).
    [[nodiscard]] Formula substitute(const std::map<std::string, Term>& binding) const;

    void collect_atoms(std::vector<FluentAtom>& out) const;
    void collect_agents(std::vector<AgentId>& out) const;

    /// Concrete DSL syntax; re-parses to a structurally equal formula.
    [[nodiscard]] std::string to_string() const;

    friend bool operator==(const Formula& a, const Formula& b);

private:
    struct Node;
    explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

    std::shared_ptr<const Node> node_;
};

} // namespace mak
