#include "mak/plan.hpp"

#include "mak/errors.hpp"

#include <exception>

namespace mak {

QueryAnswer holds_after(const PointedStructure& initial, const lang::Query& q)
{
    SuccessorResult r = succ_seq(initial, q.actions);
    if (!r.defined())
        return r.reason();
    return entails(r.structure(), q.goal);
}

std::vector<std::string> PlanResult::names() const
{
    std::vector<std::string> out;
    for (const auto* a : plan)
        out.push_back(a->name());
    return out;
}

namespace {

void check_request(const PlanRequest& r)
{
    if (r.domain == nullptr)
        throw ArgumentError("plan request without a domain");
    check_declared(r.goal, r.initial.structure.signature());
}

// Depth-first search below `p` for plans of at most `bound` further actions.
bool dfs(const PointedStructure& p, const PlanRequest& r, std::size_t bound, PlanResult& out)
{
    if (entails(p, r.goal)) {
        out.found = true;
        out.final = p;
        return true;
    }
    if (bound == 0)
        return false;
    for (const auto& a : r.domain->actions) {
        ++out.expanded;
        SuccessorResult s = succ(p, a);
        if (!s.defined())
            continue;
        out.plan.push_back(&a);
        if (dfs(s.structure(), r, bound - 1, out))
            return true;
        out.plan.pop_back();
    }
    return false;
}

} // namespace

PlanResult depth_plan(const PlanRequest& r)
{
    check_request(r);
    PlanResult out;
    if (!r.iterative_deepening) {
        dfs(r.initial, r, r.max_len, out);
        return out;
    }
    for (std::size_t bound = 0; bound <= r.max_len; ++bound) {
        out.plan.clear();
        if (dfs(r.initial, r, bound, out))
            return out;
    }
    return out;
}

namespace {

struct Node {
    PointedStructure state;
    std::vector<std::size_t> plan;  // indices into the domain's action list
};

struct Child {
    std::optional<PointedStructure> state;
    bool goal = false;
};

} // namespace

PlanResult breadth_plan(const PlanRequest& r)
{
    check_request(r);
    PlanResult out;
    const auto& actions = r.domain->actions;
    auto finish = [&](const std::vector<std::size_t>& plan, PointedStructure final) {
        out.found = true;
        for (std::size_t i : plan)
            out.plan.push_back(&actions[i]);
        out.final = std::move(final);
        return out;
    };
    if (entails(r.initial, r.goal))
        return finish({}, r.initial);

    std::vector<Node> frontier{Node{r.initial, {}}};
    for (std::size_t depth = 1; depth <= r.max_len && !frontier.empty(); ++depth) {
        const std::size_t na = actions.size();
        const std::size_t slots = frontier.size() * na;
        std::vector<Child> children(slots);
        std::vector<std::exception_ptr> errors(slots);
        auto expand = [&](std::size_t k) {
            try {
                SuccessorResult s = succ(frontier[k / na].state, actions[k % na]);
                if (s.defined()) {
                    children[k].goal = entails(s.structure(), r.goal);
                    children[k].state = std::move(s.structure());
                }
            } catch (...) {
                errors[k] = std::current_exception();
            }
        };
        const bool parallel = r.exec == Execution::parallel || (r.exec == Execution::automatic && slots >= 64);
        if (parallel) {
#pragma omp parallel for schedule(dynamic)
            for (std::ptrdiff_t k = 0; k < static_cast<std::ptrdiff_t>(slots); ++k)
                expand(static_cast<std::size_t>(k));
        } else {
            for (std::size_t k = 0; k < slots; ++k)
                expand(k);
        }
        out.expanded += slots;

        // scan in canonical order: parents in plan order, then actions in order
        std::vector<Node> next;
        for (std::size_t k = 0; k < slots; ++k) {
            if (errors[k])
                std::rethrow_exception(errors[k]);
            if (!children[k].state)
                continue;
            std::vector<std::size_t> plan = frontier[k / na].plan;
            plan.push_back(k % na);
            if (children[k].goal)
                return finish(plan, std::move(*children[k].state));
            if (depth < r.max_len)
                next.push_back(Node{std::move(*children[k].state), std::move(plan)});
        }
        frontier = std::move(next);
    }
    return out;
}

PlanResult find_plan(const PlanRequest& r)
{
    return r.strategy == Strategy::bfs ? breadth_plan(r) : depth_plan(r);
}

} // namespace mak
