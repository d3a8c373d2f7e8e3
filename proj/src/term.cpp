#include "mak/term.hpp"

#include <cctype>

namespace mak {

Term Term::integer(std::int64_t value)
{
    Term t;
    t.integer_ = true;
    t.value_ = value;
    return t;
}

Term Term::symbol(std::string name)
{
    Term t;
    t.name_ = std::move(name);
    return t;
}

bool is_variable_name(const std::string& name)
{
    return !name.empty() &&
           (std::isupper(static_cast<unsigned char>(name.front())) != 0 || name.front() == '_');
}

bool Term::is_variable() const { return !integer_ && is_variable_name(name_); }

std::string Term::to_string() const { return integer_ ? std::to_string(value_) : name_; }

std::strong_ordering operator<=>(const Term& a, const Term& b)
{
    // integers sort before symbols
    if (a.integer_ != b.integer_)
        return a.integer_ ? std::strong_ordering::less : std::strong_ordering::greater;
    if (a.integer_)
        return a.value_ <=> b.value_;
    return a.name_ <=> b.name_;
}

bool FluentAtom::is_ground() const
{
    for (const auto& a : args)
        if (a.is_variable())
            return false;
    return true;
}

std::string FluentAtom::to_string() const
{
    if (args.empty())
        return functor;
    std::string out = functor + "(";
    for (std::size_t i = 0; i < args.size(); ++i) {
        if (i > 0)
            out += ',';
        out += args[i].to_string();
    }
    out += ')';
    return out;
}

std::strong_ordering operator<=>(const FluentAtom& a, const FluentAtom& b)
{
    if (auto c = a.functor <=> b.functor; c != 0)
        return c;
    if (auto c = a.args.size() <=> b.args.size(); c != 0)
        return c;
    for (std::size_t i = 0; i < a.args.size(); ++i)
        if (auto c = a.args[i] <=> b.args[i]; c != 0)
            return c;
    return std::strong_ordering::equal;
}

} // namespace mak

std::size_t std::hash<mak::Term>::operator()(const mak::Term& t) const noexcept
{
    return t.is_integer() ? std::hash<std::int64_t>{}(t.value()) * 31 + 7
                          : std::hash<std::string>{}(t.name());
}

std::size_t std::hash<mak::FluentAtom>::operator()(const mak::FluentAtom& a) const noexcept
{
    std::size_t h = std::hash<std::string>{}(a.functor);
    for (const auto& t : a.args)
        h = h * 1000003u ^ std::hash<mak::Term>{}(t);
    return h;
}
