#pragma once

#include "mak/kripke.hpp"

#include <optional>
#include <string_view>
#include <vector>

namespace mak {

enum class FrameProperty { reflexive, symmetric, transitive, euclidean, serial };

[[nodiscard]] std::string_view to_string(FrameProperty p);

/// Properties a class demands, in checking order.
[[nodiscard]] std::vector<FrameProperty> required_properties(FrameClass c);
/// The subset that a least-superset closure can establish (everything but seriality).
[[nodiscard]] std::vector<FrameProperty> closure_properties(FrameClass c);

struct FrameViolation {
    FrameProperty property;
    AgentId agent;
    /// reflexive/serial: {s}; symmetric: {u, v} with (u,v) present, (v,u) missing;
    /// transitive: {u, v, w} missing (u,w); euclidean: {u, v, w} missing (v,w).
    std::vector<StateId> witness;
};

struct FrameReport {
    std::optional<FrameViolation> violation;

    [[nodiscard]] bool passed() const { return !violation.has_value(); }
};

/// First failing property (class order, then agent order, then state order).
[[nodiscard]] FrameReport frame_check(const KripkeStructure& m, FrameClass c);
[[nodiscard]] FrameReport check_property(const KripkeStructure& m, FrameProperty p);

/// Least superset of every relation satisfying the closure properties of `c`.
[[nodiscard]] KripkeStructure frame_closure(const KripkeStructure& m, FrameClass c);

} // namespace mak
