#pragma once

// Structure algebra used to build successor structures: state/arc removal,
// replicas, compatibility, plain and annotated unions, restriction.

#include "mak/kripke.hpp"

#include <map>
#include <optional>
#include <set>
#include <vector>

namespace mak {

struct ArcTriple {
    StateId from;
    AgentId agent;
    StateId to;

    friend auto operator<=>(const ArcTriple&, const ArcTriple&) = default;
};

/// State renaming. Used both as c (original -> copy) and as lambda (copy -> original).
using RenamingMap = std::map<StateId, StateId>;
using AgentSet = std::set<AgentId>;

/// M minus the states in U and every arc touching them. Throws ArgumentError
/// unless U is a subset of M's states.
[[nodiscard]] KripkeStructure state_remove(const KripkeStructure& m, const std::set<StateId>& removed);
/// Index form: drop[s] != 0 removes s.
[[nodiscard]] KripkeStructure state_remove(const KripkeStructure& m, const std::vector<char>& drop);

/// M minus the listed arcs; arcs not present in M are ignored.
[[nodiscard]] KripkeStructure arc_remove(const KripkeStructure& m, const std::vector<ArcTriple>& arcs);

/// Smallest k such that no state name of `m` ends in "#j" with j >= k.
[[nodiscard]] unsigned next_epoch(const KripkeStructure& m);

struct Replica {
    KripkeStructure structure;
    RenamingMap map;  // original -> copy
};

/// Copy with every state renamed to `name#epoch`. The default epoch is
/// `next_epoch(m)`, so the copy's names are disjoint from `m`'s.
[[nodiscard]] Replica replica(const KripkeStructure& m, std::optional<unsigned> epoch = std::nullopt);

/// c is a bijection M1[S] -> M2[S] preserving interpretations and labeled arcs.
[[nodiscard]] bool c_equivalent(const KripkeStructure& m1, const KripkeStructure& m2, const RenamingMap& c);

/// Searches for a renaming witnessing c-equivalence (backtracking).
[[nodiscard]] std::optional<RenamingMap> find_equivalence(const KripkeStructure& m1,
                                                          const KripkeStructure& m2);
/// As above, additionally mapping the real state to the real state.
[[nodiscard]] std::optional<RenamingMap> find_equivalence(const PointedStructure& p1,
                                                          const PointedStructure& p2);

/// Shared state names carry identical interpretations.
[[nodiscard]] bool compatible(const KripkeStructure& m1, const KripkeStructure& m2);

/// Union of states and relations; M1's interpretation wins on shared names.
/// Throws ArgumentError for incompatible inputs.
[[nodiscard]] KripkeStructure kappa_union(const KripkeStructure& m1, const KripkeStructure& m2);

/// Union of disjoint M1, M2 where every agent outside `aware` additionally
/// gets, from each u in M2, the M1-arcs leaving lambda(u).
/// lambda: M2[S] -> M1[S], total and injective.
[[nodiscard]] KripkeStructure annotated_union(const KripkeStructure& m1, const KripkeStructure& m2,
                                              const AgentSet& aware, const RenamingMap& lambda);

/// Removes every arc labeled by an agent of `agents`; same real state.
[[nodiscard]] PointedStructure restriction(const PointedStructure& p, const AgentSet& agents);
[[nodiscard]] KripkeStructure restriction(const KripkeStructure& m, const AgentSet& agents);

} // namespace mak
