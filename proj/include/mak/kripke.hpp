#pragma once

#include "mak/term.hpp"

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace mak {

/// The closed vocabulary a structure is built over: agents and ground fluents,
/// both kept sorted so that indices are canonical.
class Signature {
public:
    Signature(std::vector<AgentId> agents, std::vector<FluentAtom> fluents);

    [[nodiscard]] const std::vector<AgentId>& agents() const { return agents_; }
    [[nodiscard]] const std::vector<FluentAtom>& fluents() const { return fluents_; }
    [[nodiscard]] std::size_t agent_count() const { return agents_.size(); }
    [[nodiscard]] std::size_t fluent_count() const { return fluents_.size(); }

    [[nodiscard]] std::optional<std::size_t> agent_index(std::string_view agent) const;
    [[nodiscard]] std::optional<std::size_t> fluent_index(const FluentAtom& fluent) const;
    /// Throwing variants (DeclarationError).
    [[nodiscard]] std::size_t require_agent(std::string_view agent) const;
    [[nodiscard]] std::size_t require_fluent(const FluentAtom& fluent) const;

    /// Indices of the ground instances f(c...) of a parametrized family, or
    /// nullptr when no instance of `functor` with arguments is declared.
    [[nodiscard]] const std::vector<std::size_t>* family(std::string_view functor) const;

    friend bool operator==(const Signature& a, const Signature& b)
    {
        return a.agents_ == b.agents_ && a.fluents_ == b.fluents_;
    }

private:
    std::vector<AgentId> agents_;
    std::vector<FluentAtom> fluents_;
    std::unordered_map<std::string, std::size_t> agent_index_;
    std::unordered_map<FluentAtom, std::size_t> fluent_index_;
    std::unordered_map<std::string, std::vector<std::size_t>> families_;
};

using SignaturePtr = std::shared_ptr<const Signature>;

/// Total truth assignment over a signature's fluents, indexed like
/// `Signature::fluents()`.
class Interpretation {
public:
    Interpretation() = default;
    explicit Interpretation(std::size_t fluent_count) : bits_(fluent_count, false) {}

    [[nodiscard]] std::size_t size() const { return bits_.size(); }
    [[nodiscard]] bool operator[](std::size_t fluent) const { return bits_[fluent]; }
    void set(std::size_t fluent, bool value) { bits_[fluent] = value; }

    [[nodiscard]] const std::vector<bool>& bits() const { return bits_; }

    friend bool operator==(const Interpretation&, const Interpretation&) = default;
    friend bool operator<(const Interpretation& a, const Interpretation& b) { return a.bits_ < b.bits_; }

private:
    std::vector<bool> bits_;
};

enum class FrameClass { none, r, rt, rst, elt };

/// T -> r, S4 -> rt, S5 -> rst, KD45 -> elt, none -> none (case-insensitive).
[[nodiscard]] std::optional<FrameClass> frame_class_for_system(std::string_view system);
[[nodiscard]] std::string_view to_string(FrameClass c);

/// Finite Kripke structure: named states with interpretations and one
/// accessibility relation per agent of the signature. Successor lists are kept
/// sorted and duplicate-free; the value is treated as immutable once built.
class KripkeStructure {
public:
    explicit KripkeStructure(SignaturePtr signature);

    [[nodiscard]] const Signature& signature() const { return *signature_; }
    [[nodiscard]] const SignaturePtr& signature_ptr() const { return signature_; }

    [[nodiscard]] std::size_t size() const { return names_.size(); }
    [[nodiscard]] bool empty() const { return names_.empty(); }
    [[nodiscard]] std::size_t agent_count() const { return signature_->agent_count(); }

    [[nodiscard]] const StateId& name(std::size_t state) const { return names_[state]; }
    [[nodiscard]] const std::vector<StateId>& names() const { return names_; }
    [[nodiscard]] const Interpretation& interpretation(std::size_t state) const { return interp_[state]; }
    [[nodiscard]] bool value(std::size_t state, std::size_t fluent) const { return interp_[state][fluent]; }

    [[nodiscard]] std::optional<std::size_t> find(std::string_view name) const;
    /// Throws ArgumentError for unknown names.
    [[nodiscard]] std::size_t index_of(std::string_view name) const;

    [[nodiscard]] const std::vector<std::size_t>& successors(std::size_t agent, std::size_t state) const
    {
        return succ_[agent][state];
    }
    [[nodiscard]] bool has_arc(std::size_t from, std::size_t agent, std::size_t to) const;
    [[nodiscard]] std::size_t arc_count() const;

    /// Appends a state; throws ArgumentError on duplicate names or an
    /// interpretation of the wrong width.
    std::size_t add_state(StateId name, Interpretation interp);
    void add_arc(std::size_t from, std::size_t agent, std::size_t to);
    void remove_arc(std::size_t from, std::size_t agent, std::size_t to);
    void set_successors(std::size_t agent, std::size_t state, std::vector<std::size_t> targets);
    void clear_relation(std::size_t agent);

    /// Name-sensitive equality: same signature, same named states with the
    /// same interpretations, same labeled arcs. Storage order is irrelevant.
    friend bool operator==(const KripkeStructure& a, const KripkeStructure& b);

private:
    SignaturePtr signature_;
    std::vector<StateId> names_;
    std::vector<Interpretation> interp_;
    std::unordered_map<StateId, std::size_t> index_;
    std::vector<std::vector<std::vector<std::size_t>>> succ_;  // [agent][state] -> sorted targets
};

struct PointedStructure {
    KripkeStructure structure;
    std::size_t real = 0;

    [[nodiscard]] const StateId& real_name() const { return structure.name(real); }

    friend bool operator==(const PointedStructure& a, const PointedStructure& b)
    {
        return a.structure == b.structure && a.real_name() == b.real_name();
    }
};

} // namespace mak
