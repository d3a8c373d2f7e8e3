#include "mak/eval.hpp"

#include "mak/errors.hpp"
#include "mak/kernels.hpp"

namespace mak {

void check_declared(const Formula& f, const Signature& sig)
{
    switch (f.kind()) {
    case Formula::Kind::top:
    case Formula::Kind::bottom:
        return;
    case Formula::Kind::atom:
        if (!f.fluent().is_ground())
            throw DeclarationError("non-ground atom '" + f.fluent().to_string() + "'");
        (void)sig.require_fluent(f.fluent());
        return;
    case Formula::Kind::negation:
        check_declared(f.operand(), sig);
        return;
    case Formula::Kind::conjunction:
    case Formula::Kind::disjunction:
    case Formula::Kind::implication:
        check_declared(f.lhs(), sig);
        check_declared(f.rhs(), sig);
        return;
    case Formula::Kind::knows:
        (void)sig.require_agent(f.agent());
        check_declared(f.operand(), sig);
        return;
    case Formula::Kind::everyone:
    case Formula::Kind::common:
        for (const auto& a : f.group())
            (void)sig.require_agent(a);
        check_declared(f.operand(), sig);
        return;
    case Formula::Kind::knows_value:
        (void)sig.require_agent(f.agent());
        if (sig.family(f.family()) == nullptr)
            throw DeclarationError("undeclared fluent family '" + f.family() + "'");
        return;
    }
}

StateLabels label_states(const KripkeStructure& m, const Formula& f, Execution exec)
{
    check_declared(f, m.signature());
    if (exec == Execution::automatic)
        exec = m.size() >= kernels::parallel_threshold ? Execution::parallel : Execution::serial;
    return exec == Execution::parallel ? kernels::label_parallel(m, f) : kernels::label_serial(m, f);
}

bool holds_at(const KripkeStructure& m, std::size_t state, const Formula& f)
{
    if (state >= m.size())
        throw ArgumentError("state index out of range");
    return label_states(m, f)[state] != 0;
}

bool entails(const PointedStructure& p, const Formula& f) { return holds_at(p.structure, p.real, f); }

} // namespace mak
