#pragma once

// Query answering and bounded planners, from the perspective of an external
// observer who knows the true pointed structure.

#include "mak/eval.hpp"
#include "mak/lang/parser.hpp"
#include "mak/transition.hpp"

#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

namespace mak {

/// true/false, or the reason the action sequence is undefined.
using QueryAnswer = std::variant<bool, UndefinedReason>;

[[nodiscard]] QueryAnswer holds_after(const PointedStructure& initial, const lang::Query& q);

enum class Strategy { dfs, bfs };

struct PlanRequest {
    PointedStructure initial;
    const lang::GroundDomain* domain = nullptr;
    Formula goal;
    std::size_t max_len = 0;
    Strategy strategy = Strategy::dfs;
    /// dfs only. true: depth-first passes with bounds 0, 1, ..., max_len
    /// (returns a shortest plan). false: a single depth-first pass with bound
    /// max_len (returns the lexicographically first plan of length <= max_len).
    bool iterative_deepening = true;
    Execution exec = Execution::automatic;  // bfs layer expansion
};

struct PlanResult {
    bool found = false;
    std::vector<const lang::ActionInstance*> plan;
    std::optional<PointedStructure> final;
    std::uint64_t expanded = 0;  // successor computations performed

    [[nodiscard]] std::vector<std::string> names() const;
};

[[nodiscard]] PlanResult depth_plan(const PlanRequest& r);

/// Shortest plan; among plans of equal length the lexicographically first by
/// action order. Each layer's successors may be computed by several threads;
/// the selected plan is the one the serial scan would pick.
[[nodiscard]] PlanResult breadth_plan(const PlanRequest& r);

/// Dispatch on `r.strategy`.
[[nodiscard]] PlanResult find_plan(const PlanRequest& r);

} // namespace mak
