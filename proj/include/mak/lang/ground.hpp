#pragma once

#include "mak/lang/domain.hpp"
#include "mak/transform.hpp"

#include <optional>
#include <string_view>
#include <vector>

namespace mak::lang {

/// Every law schema instantiated with all assignments of agents to its
/// variables (repeats included). Instances that mention undeclared fluents or
/// whose private announcement payload is not a literal are dropped. Observers
/// that are also performers are removed from the observer set.
[[nodiscard]] Domain ground(const Domain& d);

enum class ActionKind { public_announcement, private_announcement, sensing, ontic };

[[nodiscard]] std::string_view to_string(ActionKind k);

struct CausesEffect {
    std::vector<Literal> effect;
    std::vector<Literal> guard;  // empty = true
};

/// A ground action with all of its laws resolved.
struct ActionInstance {
    ActionTerm term;
    ActionKind kind = ActionKind::ontic;
    Formula pre;                        // conjunction of executability conditions
    Formula payload;                    // announcements
    FluentAtom sensed;                  // sensing
    std::vector<CausesEffect> effects;  // ontic
    AgentSet performers;
    AgentSet observers;

    [[nodiscard]] std::string name() const { return term.to_string(); }
};

/// A ground domain ready for model generation, transition and planning.
struct GroundDomain {
    Domain source;  // grounded laws
    SignaturePtr signature;
    FrameClass frame = FrameClass::none;
    std::vector<ActionInstance> actions;  // sorted by name, then arguments

    [[nodiscard]] const ActionInstance* find(const ActionTerm& term) const;
};

/// Groups ground laws by action. Throws ArgumentError when an action has more
/// than one kind of effect law, or Causes laws with different performers.
/// Actions without any effect law are not actions of the domain.
[[nodiscard]] std::vector<ActionInstance> resolve_actions(const Domain& grounded);

/// ground + resolve_actions.
[[nodiscard]] GroundDomain compile(const Domain& d);

} // namespace mak::lang
