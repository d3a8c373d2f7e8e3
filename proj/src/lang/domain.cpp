#include "mak/lang/domain.hpp"

#include "mak/errors.hpp"

namespace mak::lang {

bool ActionTerm::is_ground() const
{
    for (const auto& a : args)
        if (a.is_variable())
            return false;
    return true;
}

std::string ActionTerm::to_string() const
{
    return FluentAtom{name, args}.to_string();
}

ActionTerm ActionTerm::substitute(const std::map<std::string, Term>& binding) const
{
    ActionTerm out = *this;
    for (auto& t : out.args)
        if (t.is_variable())
            if (auto it = binding.find(t.name()); it != binding.end())
                t = it->second;
    return out;
}

std::strong_ordering operator<=>(const ActionTerm& a, const ActionTerm& b)
{
    if (auto c = a.name <=> b.name; c != 0)
        return c;
    // lexicographic over arguments; a proper prefix sorts first
    const std::size_t n = std::min(a.args.size(), b.args.size());
    for (std::size_t i = 0; i < n; ++i)
        if (auto c = a.args[i] <=> b.args[i]; c != 0)
            return c;
    return a.args.size() <=> b.args.size();
}

Formula Literal::to_formula() const
{
    auto f = Formula::atom(atom);
    return positive ? f : Formula::negation(f);
}

Expr Expr::constant(std::int64_t value)
{
    return Expr(std::make_shared<const Node>(Node{Op::constant, value, {}, {}}));
}

Expr Expr::variable(std::string name)
{
    return Expr(std::make_shared<const Node>(Node{Op::variable, 0, std::move(name), {}}));
}

Expr Expr::binary(Op op, Expr lhs, Expr rhs)
{
    if (op == Op::constant || op == Op::variable)
        throw ArgumentError("Expr::binary needs an operator");
    return Expr(std::make_shared<const Node>(Node{op, 0, {}, {std::move(lhs), std::move(rhs)}}));
}

Expr::Op Expr::op() const { return node_->op; }
std::int64_t Expr::value() const { return node_->value; }
const std::string& Expr::name() const { return node_->name; }
const Expr& Expr::lhs() const { return node_->children.at(0); }
const Expr& Expr::rhs() const { return node_->children.at(1); }

void Expr::collect_variables(std::vector<std::string>& out) const
{
    if (node_->op == Op::variable)
        out.push_back(node_->name);
    for (const auto& c : node_->children)
        c.collect_variables(out);
}

namespace {

int strength(Expr::Op op)
{
    switch (op) {
    case Expr::Op::constant:
    case Expr::Op::variable:
        return 4;
    case Expr::Op::mul:
        return 3;
    case Expr::Op::add:
    case Expr::Op::sub:
        return 2;
    default:
        return 1;
    }
}

const char* symbol(Expr::Op op)
{
    switch (op) {
    case Expr::Op::add:
        return " + ";
    case Expr::Op::sub:
        return " - ";
    case Expr::Op::mul:
        return " * ";
    case Expr::Op::lt:
        return " < ";
    case Expr::Op::le:
        return " <= ";
    case Expr::Op::gt:
        return " > ";
    case Expr::Op::ge:
        return " >= ";
    case Expr::Op::eq:
        return " = ";
    case Expr::Op::ne:
        return " != ";
    default:
        return "?";
    }
}

} // namespace

std::string Expr::to_string() const
{
    const Node& n = *node_;
    if (n.op == Op::constant)
        return std::to_string(n.value);
    if (n.op == Op::variable)
        return n.name;
    const int own = strength(n.op);
    auto wrap = [](const Expr& e, bool parens) { return parens ? "(" + e.to_string() + ")" : e.to_string(); };
    // comparisons do not chain, so both sides of one are parenthesized at equal strength
    const bool cmp = own == 1;
    return wrap(lhs(), strength(lhs().op()) < own || (cmp && strength(lhs().op()) == own)) + symbol(n.op) +
           wrap(rhs(), strength(rhs().op()) <= own);
}

SignaturePtr Domain::signature() const
{
    return std::make_shared<const Signature>(agents, fluents);
}

FrameClass Domain::frame_class() const
{
    if (!system)
        return FrameClass::none;
    if (auto c = frame_class_for_system(*system))
        return *c;
    throw ArgumentError("unknown system '" + *system + "'");
}

} // namespace mak::lang
