#pragma once

#include "mak/kripke.hpp"

#include <optional>
#include <string>

namespace mak::cli {

/// Graphviz digraph: nodes sorted by name, labeled with the name and the true
/// fluents, the real state drawn as a double circle; one edge per arc, sorted
/// by (from, to, agent) and labeled with the agent.
[[nodiscard]] std::string to_dot(const KripkeStructure& m, std::optional<std::size_t> real = std::nullopt);
[[nodiscard]] std::string to_dot(const PointedStructure& p);

} // namespace mak::cli
