#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace mak {

using AgentId = std::string;
using StateId = std::string;

/// Argument of a fluent or action term: an integer, a constant symbol, or a
/// schema variable (symbols starting with an uppercase letter or '_').
class Term {
public:
    Term() = default;

    static Term integer(std::int64_t value);
    static Term symbol(std::string name);

    [[nodiscard]] bool is_integer() const { return integer_; }
    [[nodiscard]] bool is_variable() const;
    [[nodiscard]] std::int64_t value() const { return value_; }
    [[nodiscard]] const std::string& name() const { return name_; }
    [[nodiscard]] std::string to_string() const;

    friend bool operator==(const Term&, const Term&) = default;
    friend std::strong_ordering operator<=>(const Term& a, const Term& b);

private:
    bool integer_ = false;
    std::int64_t value_ = 0;
    std::string name_;
};

[[nodiscard]] bool is_variable_name(const std::string& name);

/// `functor` or `functor(arg, ...)`. Fluents stored in structures are ground;
/// schema laws may carry variables until grounding.
struct FluentAtom {
    std::string functor;
    std::vector<Term> args;

    [[nodiscard]] bool is_ground() const;
    [[nodiscard]] std::string to_string() const;

    friend bool operator==(const FluentAtom&, const FluentAtom&) = default;
    friend std::strong_ordering operator<=>(const FluentAtom& a, const FluentAtom& b);
};

} // namespace mak

template <>
struct std::hash<mak::Term> {
    std::size_t operator()(const mak::Term& t) const noexcept;
};

template <>
struct std::hash<mak::FluentAtom> {
    std::size_t operator()(const mak::FluentAtom& a) const noexcept;
};
