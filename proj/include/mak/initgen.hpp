#pragma once

// Initial pointed structures: bounded explicit search for small domains, and
// observation partitions for large implicitly given universes.

#include "mak/eval.hpp"
#include "mak/lang/ground.hpp"

#include <cstdint>
#include <optional>
#include <set>
#include <vector>

namespace mak {

struct GenConfig {
    std::size_t max_states = 2;  // m >= 1; at most 8
    std::optional<FrameClass> frame;  // defaults to the domain's system
    std::size_t limit = 0;            // 0 = no limit
};

/// Enumerates, without isomorphic duplicates, every pointed structure with
/// 1..m states whose relations satisfy the frame class and whose real state
/// entails every init formula.
///
/// Order: state count ascending; the real state is s1 and its interpretation
/// runs over the assignments allowed by the propositional inits, true before
/// false in fluent order; the other states take nondecreasing tuples of
/// interpretations ranked by Hamming distance to the real one; relations run
/// over the closed sets of each agent in lectic order.
class ExplicitGenerator {
public:
    ExplicitGenerator(SignaturePtr sig, FrameClass frame, std::vector<Formula> inits, std::size_t max_states);
    ExplicitGenerator(const lang::GroundDomain& d, const GenConfig& cfg);

    /// Next structure, or nullopt once the bound is exhausted.
    std::optional<PointedStructure> next();

    /// Number of candidate structures examined so far.
    [[nodiscard]] std::uint64_t examined() const { return examined_; }

private:
    bool start_size(std::size_t n);
    bool advance();
    [[nodiscard]] PointedStructure build() const;
    [[nodiscard]] std::vector<std::uint64_t> canonical_key() const;

    SignaturePtr sig_;
    FrameClass frame_;
    std::vector<Formula> inits_;
    std::vector<Formula> modal_inits_;
    std::size_t max_states_;

    std::vector<Interpretation> real_choices_;
    std::vector<Interpretation> all_interps_;

    std::size_t n_ = 0;
    bool exhausted_ = false;
    bool fresh_ = false;  // current odometer position not yet examined
    std::size_t real_pos_ = 0;
    std::vector<Interpretation> ranked_;  // all interpretations ranked against the current real one
    std::vector<std::size_t> others_;     // nondecreasing indices into ranked_
    std::vector<std::uint64_t> relations_;  // closed relations for size n_, as pair bitmasks
    std::vector<std::size_t> rel_pos_;     // per agent, index into relations_
    std::set<std::vector<std::uint64_t>> seen_;
    std::uint64_t examined_ = 0;
};

/// Collects up to `cfg.limit` structures (all when 0).
[[nodiscard]] std::vector<PointedStructure> generate_explicit(const lang::GroundDomain& d, const GenConfig& cfg);

/// All relations on n states (n <= 8) closed under the closure properties of
/// `c`, as bitmasks over pair index u*n+v, in lectic order. Seriality is
/// filtered here, not repaired.
[[nodiscard]] std::vector<std::uint64_t> closed_relations(std::size_t n, FrameClass c);

/// Kripke structure of an implicit universe: one state per satisfying
/// assignment, named like `x4_y13` (`m` marks negatives), interpretation
/// `v(value)` for each variable and derived value; agent i relates states with
/// equal observation keys. Agents without an observation see nothing.
/// Throws ArgumentError for an empty universe.
[[nodiscard]] KripkeStructure generate_partition(const std::vector<AgentId>& agents, const lang::UniverseSpec& u,
                                                 Execution exec = Execution::automatic);

/// M minus the states where `phi` is false (evaluated in M).
[[nodiscard]] KripkeStructure filter_states(const KripkeStructure& m, const Formula& phi,
                                            Execution exec = Execution::automatic);

/// Left fold of filter_states; `sizes`, when given, receives the state count
/// after each step.
[[nodiscard]] KripkeStructure announcement_chain(const KripkeStructure& m, const std::vector<Formula>& phis,
                                                 std::vector<std::size_t>* sizes = nullptr,
                                                 Execution exec = Execution::automatic);

} // namespace mak
