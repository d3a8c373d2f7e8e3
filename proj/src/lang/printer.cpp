#include "mak/lang/printer.hpp"

namespace mak::lang {

namespace {

std::string agents_text(const std::vector<AgentId>& agents)
{
    if (agents.size() == 1)
        return agents.front();
    std::string out = "[";
    for (std::size_t i = 0; i < agents.size(); ++i)
        out += (i > 0 ? ", " : "") + agents[i];
    return out + "]";
}

std::string literals_text(const std::vector<Literal>& lits)
{
    if (lits.empty())
        return "true";
    std::string out;
    for (std::size_t i = 0; i < lits.size(); ++i)
        out += (i > 0 ? " & " : "") + lits[i].to_formula().to_string();
    return out;
}

} // namespace

std::string print_law(const ActionLaw& law)
{
    std::string out = law.action.to_string();
    switch (law.kind) {
    case LawKind::executable:
        out += " executable_if " + law.condition.to_string();
        break;
    case LawKind::causes:
        out += " causes " + literals_text(law.effect) + " if " + literals_text(law.guard) + " performed_by " +
               agents_text(law.performers);
        break;
    case LawKind::announces:
        out += " announces " + law.payload.to_string() + " performed_by " + agents_text(law.performers);
        if (!law.observers.empty())
            out += " observed_by " + agents_text(law.observers);
        break;
    case LawKind::determines:
        out += " determines " + law.sensed.to_string() + " performed_by " + agents_text(law.performers);
        if (!law.observers.empty())
            out += " observed_by " + agents_text(law.observers);
        break;
    }
    return out + ".";
}

std::string print_domain(const Domain& d)
{
    std::string out;
    for (const auto& a : d.agents)
        out += "agent(" + a + ").\n";
    for (const auto& f : d.fluents)
        out += "fluent(" + f.to_string() + ").\n";
    if (d.system)
        out += "system(" + *d.system + ").\n";
    for (const auto& f : d.inits)
        out += "init(" + f.to_string() + ").\n";

    const auto& u = d.universe;
    for (const auto& v : u.variables)
        out += "var(" + v.name + ", " + std::to_string(v.low) + ".." + std::to_string(v.high) + ").\n";
    for (const auto& c : u.constraints)
        out += "constraint(" + c.to_string() + ").\n";
    for (const auto& dv : u.derived)
        out += "derive(" + dv.name + ", " + dv.value.to_string() + ").\n";
    for (const auto& o : u.observations)
        out += "observes(" + o.agent + ", " + o.key.to_string() + ").\n";
    for (const auto& a : u.announcements)
        out += "announce(" + a.to_string() + ").\n";

    for (const auto& law : d.laws)
        out += print_law(law) + "\n";
    return out;
}

} // namespace mak::lang
