#pragma once

#include "mak/formula.hpp"
#include "mak/kripke.hpp"

#include <vector>

namespace mak {

/// How a state-wise kernel is run. `automatic` picks the OpenMP kernel for
/// structures of at least `kernels::parallel_threshold` states.
enum class Execution { serial, parallel, automatic };

/// One truth value per state (char rather than bool so that threads may write
/// neighbouring entries).
using StateLabels = std::vector<char>;

/// Throws DeclarationError unless every atom, agent and knows-value family of
/// `f` is declared in `sig`.
void check_declared(const Formula& f, const Signature& sig);

/// Truth of `f` at every state of `m`.
[[nodiscard]] StateLabels label_states(const KripkeStructure& m, const Formula& f,
                                       Execution exec = Execution::automatic);

[[nodiscard]] bool holds_at(const KripkeStructure& m, std::size_t state, const Formula& f);

/// (M, s) |= f
[[nodiscard]] bool entails(const PointedStructure& p, const Formula& f);

} // namespace mak
