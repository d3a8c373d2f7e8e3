#pragma once

// Successor function for the four action classes, composed from the
// structure algebra in transform.hpp.

#include "mak/lang/ground.hpp"
#include "mak/transform.hpp"

#include <span>
#include <string_view>
#include <variant>

namespace mak {

enum class UndefinedReason { precondition_failed, untruthful_announcement, conflicting_causes_laws };

[[nodiscard]] std::string_view to_string(UndefinedReason r);

class SuccessorResult {
public:
    SuccessorResult(PointedStructure p) : value_(std::move(p)) {}
    SuccessorResult(UndefinedReason r) : value_(r) {}

    [[nodiscard]] bool defined() const { return std::holds_alternative<PointedStructure>(value_); }
    [[nodiscard]] const PointedStructure& structure() const { return std::get<PointedStructure>(value_); }
    [[nodiscard]] PointedStructure& structure() { return std::get<PointedStructure>(value_); }
    [[nodiscard]] UndefinedReason reason() const { return std::get<UndefinedReason>(value_); }

private:
    std::variant<PointedStructure, UndefinedReason> value_;
};

[[nodiscard]] bool executable(const PointedStructure& p, const lang::ActionInstance& a);

/// Public announcement of `phi`, which must be a fluent formula, k(i, psi), or
/// ~(k(i, psi) | k(i, ~psi)); anything else is an ArgumentError.
[[nodiscard]] SuccessorResult succ_public(const PointedStructure& p, const Formula& phi,
                                          const Formula& pre = Formula::top());

/// Private announcement of a fluent literal by `alpha` to `beta`. Agents in
/// alpha and beta both learn the literal; everyone else is oblivious.
[[nodiscard]] SuccessorResult succ_private(const PointedStructure& p, const Formula& literal,
                                           const AgentSet& alpha, const AgentSet& beta,
                                           const Formula& pre = Formula::top());

/// Sensing of `f` by `alpha`, observed by `beta` (who learn that alpha now
/// knows the value, not the value itself).
[[nodiscard]] SuccessorResult succ_sense(const PointedStructure& p, const FluentAtom& f, const AgentSet& alpha,
                                         const AgentSet& beta, const Formula& pre = Formula::top());

/// [phi]pi: the literals forced, every other fluent unchanged. Throws
/// ArgumentError for f & ~f or undeclared fluents.
[[nodiscard]] Interpretation apply_literals(const Interpretation& pi, const std::vector<lang::Literal>& phi,
                                            const Signature& sig);

/// World-altering action performed by `alpha`.
[[nodiscard]] SuccessorResult succ_ontic(const PointedStructure& p, const std::vector<lang::CausesEffect>& effects,
                                         const AgentSet& alpha, const Formula& pre = Formula::top());

[[nodiscard]] SuccessorResult succ(const PointedStructure& p, const lang::ActionInstance& a);

/// Left fold of succ; stops at the first undefined step. Empty -> p.
[[nodiscard]] SuccessorResult succ_seq(const PointedStructure& p,
                                       std::span<const lang::ActionInstance* const> actions);

} // namespace mak
