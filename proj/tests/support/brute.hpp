#pragma once

// Exhaustive enumerators used as oracles for the search-based modules.

#include "mak/formula.hpp"
#include "mak/kripke.hpp"
#include "mak/lang/ground.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace brute {

/// Every pointed structure with 1..max_states states over sig whose relations
/// have the frame class's properties and whose real state satisfies all inits,
/// one representative per isomorphism class. Only for tiny signatures.
std::vector<mak::PointedStructure> all_models(const mak::SignaturePtr& sig, mak::FrameClass frame,
                                              const std::vector<mak::Formula>& inits, std::size_t max_states);

struct ShortestPlan {
    std::size_t length = 0;
    std::vector<std::size_t> plan;  // indices into the domain's action list
};

/// Tries every action sequence of length 0, 1, ..., max_len in lexicographic
/// index order and returns the first whose successor satisfies the goal.
std::optional<ShortestPlan> shortest_plan(const mak::PointedStructure& initial, const mak::lang::GroundDomain& d,
                                          const mak::Formula& goal, std::size_t max_len);

struct SumProduct {
    std::size_t initial = 0;
    std::vector<std::size_t> after;                   // sizes after each statement
    std::vector<std::pair<long, long>> solutions;     // (x, y)
};

/// The sum-and-product puzzle by plain counting over (x, y) pairs.
SumProduct sum_product(long max);

} // namespace brute
