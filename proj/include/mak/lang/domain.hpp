#pragma once

// In-memory form of a parsed `.mad` domain: declarations, init axioms, action
// law schemas, and the optional universe block used by knowledge puzzles.

#include "mak/formula.hpp"
#include "mak/kripke.hpp"

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace mak::lang {

/// `name` or `name(arg, ...)`; arguments may be schema variables.
struct ActionTerm {
    std::string name;
    std::vector<Term> args;

    [[nodiscard]] bool is_ground() const;
    [[nodiscard]] std::string to_string() const;
    [[nodiscard]] ActionTerm substitute(const std::map<std::string, Term>& binding) const;

    friend bool operator==(const ActionTerm&, const ActionTerm&) = default;
    friend std::strong_ordering operator<=>(const ActionTerm& a, const ActionTerm& b);
};

struct Literal {
    FluentAtom atom;
    bool positive = true;

    [[nodiscard]] Formula to_formula() const;
    friend bool operator==(const Literal&, const Literal&) = default;
};

enum class LawKind { executable, causes, announces, determines };

struct ActionLaw {
    LawKind kind = LawKind::executable;
    ActionTerm action;
    Formula condition;               // executable: the precondition; causes: the `if` part
    std::vector<Literal> effect;     // causes
    std::vector<Literal> guard;      // causes: condition as literals (empty = true)
    Formula payload;                 // announces
    FluentAtom sensed;               // determines
    std::vector<AgentId> performers; // may hold schema variables
    std::vector<AgentId> observers;
    std::size_t line = 0;
};

/// Integer expression over universe variables: + - * and comparisons
/// (comparisons evaluate to 0 or 1).
class Expr {
public:
    enum class Op { constant, variable, add, sub, mul, lt, le, gt, ge, eq, ne };

    static Expr constant(std::int64_t value);
    static Expr variable(std::string name);
    static Expr binary(Op op, Expr lhs, Expr rhs);

    [[nodiscard]] Op op() const;
    [[nodiscard]] std::int64_t value() const;
    [[nodiscard]] const std::string& name() const;
    [[nodiscard]] const Expr& lhs() const;
    [[nodiscard]] const Expr& rhs() const;

    /// `lookup(name)` supplies variable values.
    template <class Lookup>
    [[nodiscard]] std::int64_t evaluate(const Lookup& lookup) const;

    void collect_variables(std::vector<std::string>& out) const;
    [[nodiscard]] std::string to_string() const;

private:
    struct Node;
    explicit Expr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
    std::shared_ptr<const Node> node_;
};

struct Expr::Node {
    Op op;
    std::int64_t value = 0;
    std::string name;
    std::vector<Expr> children;
};

template <class Lookup>
std::int64_t Expr::evaluate(const Lookup& lookup) const
{
    const Node& n = *node_;
    switch (n.op) {
    case Op::constant:
        return n.value;
    case Op::variable:
        return lookup(n.name);
    default:
        break;
    }
    const std::int64_t a = n.children[0].evaluate(lookup);
    const std::int64_t b = n.children[1].evaluate(lookup);
    switch (n.op) {
    case Op::add:
        return a + b;
    case Op::sub:
        return a - b;
    case Op::mul:
        return a * b;
    case Op::lt:
        return a < b;
    case Op::le:
        return a <= b;
    case Op::gt:
        return a > b;
    case Op::ge:
        return a >= b;
    case Op::eq:
        return a == b;
    case Op::ne:
        return a != b;
    default:
        return 0;
    }
}

struct VarRange {
    std::string name;
    std::int64_t low = 0;
    std::int64_t high = 0;
};

struct Observation {
    AgentId agent;
    Expr key;
};

struct Derived {
    std::string name;
    Expr value;
};

/// State space given implicitly: every assignment of the variables that
/// satisfies all constraints is a state, and an agent cannot tell apart two
/// states with the same observation value.
struct UniverseSpec {
    std::vector<VarRange> variables;
    std::vector<Expr> constraints;
    std::vector<Observation> observations;
    std::vector<Derived> derived;
    std::vector<Formula> announcements;

    [[nodiscard]] bool empty() const
    {
        return variables.empty() && constraints.empty() && observations.empty() && derived.empty() &&
               announcements.empty();
    }
};

struct Domain {
    std::vector<AgentId> agents;      // declaration order, unique
    std::vector<FluentAtom> fluents;  // ground, declaration order, unique
    std::optional<std::string> system;
    std::vector<Formula> inits;
    std::vector<ActionLaw> laws;
    UniverseSpec universe;

    [[nodiscard]] SignaturePtr signature() const;
    /// The declared system mapped to its frame class; `none` when absent.
    [[nodiscard]] FrameClass frame_class() const;
};

} // namespace mak::lang
