#include "mak/initgen.hpp"

#include "mak/errors.hpp"
#include "mak/frame.hpp"
#include "mak/kernels.hpp"
#include "mak/transform.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace mak {

namespace {

constexpr std::size_t max_generated_states = 8;  // n*n pair bits must fit in 64

bool fluent_holds(const Formula& f, const Interpretation& pi, const Signature& sig)
{
    using K = Formula::Kind;
    switch (f.kind()) {
    case K::top:
        return true;
    case K::bottom:
        return false;
    case K::atom:
        return pi[sig.require_fluent(f.fluent())];
    case K::negation:
        return !fluent_holds(f.operand(), pi, sig);
    case K::conjunction:
        return fluent_holds(f.lhs(), pi, sig) && fluent_holds(f.rhs(), pi, sig);
    case K::disjunction:
        return fluent_holds(f.lhs(), pi, sig) || fluent_holds(f.rhs(), pi, sig);
    case K::implication:
        return !fluent_holds(f.lhs(), pi, sig) || fluent_holds(f.rhs(), pi, sig);
    default:
        throw ArgumentError("not a fluent formula: " + f.to_string());
    }
}

std::size_t hamming(const Interpretation& a, const Interpretation& b)
{
    std::size_t d = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        d += a[i] != b[i] ? 1 : 0;
    return d;
}

std::uint64_t bit(std::size_t n, std::size_t u, std::size_t v)
{
    return std::uint64_t{1} << (u * n + v);
}

std::uint64_t close_mask(std::uint64_t r, std::size_t n, const std::vector<FrameProperty>& props)
{
    auto has = [&](FrameProperty p) { return std::find(props.begin(), props.end(), p) != props.end(); };
    const bool refl = has(FrameProperty::reflexive);
    const bool sym = has(FrameProperty::symmetric);
    const bool trans = has(FrameProperty::transitive);
    const bool eucl = has(FrameProperty::euclidean);
    auto in = [&](std::size_t u, std::size_t v) { return (r & bit(n, u, v)) != 0; };
    for (;;) {
        const std::uint64_t before = r;
        for (std::size_t u = 0; u < n; ++u) {
            if (refl)
                r |= bit(n, u, u);
            for (std::size_t v = 0; v < n; ++v) {
                if (!in(u, v))
                    continue;
                if (sym)
                    r |= bit(n, v, u);
                for (std::size_t w = 0; w < n; ++w) {
                    if (trans && in(v, w))
                        r |= bit(n, u, w);
                    if (eucl && in(u, w))
                        r |= bit(n, v, w);
                }
            }
        }
        if (r == before)
            return r;
    }
}

} // namespace

std::vector<std::uint64_t> closed_relations(std::size_t n, FrameClass c)
{
    if (n == 0 || n > max_generated_states)
        throw ArgumentError("closed_relations supports 1..8 states");
    const auto props = closure_properties(c);
    const std::size_t bits = n * n;
    if (props.empty() && bits > 20)
        throw ArgumentError("unconstrained relations on more than 4 states are not enumerated");
    const bool serial = c == FrameClass::elt;

    // Ganter's NextClosure over the pair bits
    std::vector<std::uint64_t> out;
    auto emit = [&](std::uint64_t r) {
        if (serial)
            for (std::size_t u = 0; u < n; ++u)
                if (((r >> (u * n)) & ((std::uint64_t{1} << n) - 1)) == 0)
                    return;
        out.push_back(r);
    };
    std::uint64_t a = close_mask(0, n, props);
    emit(a);
    for (;;) {
        bool found = false;
        for (std::size_t i = bits; i-- > 0;) {
            const std::uint64_t ib = std::uint64_t{1} << i;
            if (a & ib) {
                a &= ~ib;
                continue;
            }
            const std::uint64_t b = close_mask(a | ib, n, props);
            if ((b & (ib - 1)) == a) {
                a = b;
                found = true;
                break;
            }
        }
        if (!found)
            break;
        emit(a);
    }
    return out;
}

ExplicitGenerator::ExplicitGenerator(SignaturePtr sig, FrameClass frame, std::vector<Formula> inits,
                                     std::size_t max_states)
    : sig_(std::move(sig)), frame_(frame), inits_(std::move(inits)), max_states_(max_states)
{
    if (max_states_ == 0)
        throw ArgumentError("the state bound must be at least 1");
    if (max_states_ > max_generated_states)
        throw ArgumentError("the state bound is at most 8");
    for (const auto& f : inits_)
        check_declared(f, *sig_);

    const std::size_t nf = sig_->fluent_count();
    // literal inits pin fluents; the rest are enumerated
    std::vector<int> pinned(nf, -1);
    bool contradictory = false;
    for (const auto& f : inits_) {
        if (!f.is_literal())
            continue;
        const bool positive = f.kind() == Formula::Kind::atom;
        const std::size_t i = sig_->require_fluent(positive ? f.fluent() : f.operand().fluent());
        if (pinned[i] != -1 && pinned[i] != int(positive))
            contradictory = true;
        pinned[i] = positive;
    }
    std::vector<std::size_t> free;
    for (std::size_t i = 0; i < nf; ++i)
        if (pinned[i] == -1)
            free.push_back(i);
    if (free.size() > 20)
        throw ArgumentError("too many unconstrained fluents for explicit generation");
    if (!contradictory) {
        const std::uint64_t count = std::uint64_t{1} << free.size();
        for (std::uint64_t k = 0; k < count; ++k) {
            Interpretation pi(nf);
            for (std::size_t i = 0; i < nf; ++i)
                if (pinned[i] != -1)
                    pi.set(i, pinned[i] == 1);
            // the first free fluent is the most significant digit; true comes first
            for (std::size_t j = 0; j < free.size(); ++j)
                pi.set(free[j], ((k >> (free.size() - 1 - j)) & 1) == 0);
            bool ok = true;
            for (const auto& f : inits_)
                if (f.is_fluent_formula() && !fluent_holds(f, pi, *sig_))
                    ok = false;
            if (ok)
                real_choices_.push_back(std::move(pi));
        }
    }
    for (const auto& f : inits_)
        if (!f.is_fluent_formula())
            modal_inits_.push_back(f);

    if (!start_size(1))
        exhausted_ = true;
}

ExplicitGenerator::ExplicitGenerator(const lang::GroundDomain& d, const GenConfig& cfg)
    : ExplicitGenerator(d.signature, cfg.frame.value_or(d.frame), d.source.inits, cfg.max_states)
{
}

bool ExplicitGenerator::start_size(std::size_t n)
{
    if (n > max_states_ || real_choices_.empty()) {
        exhausted_ = true;
        return false;
    }
    if (n >= 2 && all_interps_.empty()) {
        const std::size_t nf = sig_->fluent_count();
        if (nf > 16)
            throw ArgumentError("too many fluents to enumerate the interpretations of non-real states");
        for (std::uint64_t k = 0; k < (std::uint64_t{1} << nf); ++k) {
            Interpretation pi(nf);
            for (std::size_t i = 0; i < nf; ++i)
                pi.set(i, ((k >> (nf - 1 - i)) & 1) == 0);
            all_interps_.push_back(std::move(pi));
        }
    }
    n_ = n;
    relations_ = closed_relations(n, frame_);
    rel_pos_.assign(sig_->agent_count(), 0);
    real_pos_ = 0;
    others_.assign(n - 1, 0);
    seen_.clear();
    ranked_.clear();
    if (n >= 2) {
        ranked_ = all_interps_;
        const Interpretation& real = real_choices_[real_pos_];
        std::stable_sort(ranked_.begin(), ranked_.end(), [&](const Interpretation& a, const Interpretation& b) {
            return hamming(a, real) < hamming(b, real);
        });
    }
    fresh_ = true;
    return true;
}

bool ExplicitGenerator::advance()
{
    for (std::size_t a = rel_pos_.size(); a-- > 0;) {
        if (++rel_pos_[a] < relations_.size())
            return true;
        rel_pos_[a] = 0;
    }
    // next nondecreasing tuple
    for (std::size_t k = others_.size(); k-- > 0;) {
        if (others_[k] + 1 < ranked_.size()) {
            const std::size_t v = others_[k] + 1;
            for (std::size_t j = k; j < others_.size(); ++j)
                others_[j] = v;
            return true;
        }
    }
    std::fill(others_.begin(), others_.end(), 0);
    if (++real_pos_ < real_choices_.size()) {
        if (n_ >= 2) {
            ranked_ = all_interps_;
            const Interpretation& real = real_choices_[real_pos_];
            std::stable_sort(ranked_.begin(), ranked_.end(), [&](const Interpretation& a, const Interpretation& b) {
                return hamming(a, real) < hamming(b, real);
            });
        }
        return true;
    }
    return start_size(n_ + 1);
}

PointedStructure ExplicitGenerator::build() const
{
    KripkeStructure m(sig_);
    m.add_state("s1", real_choices_[real_pos_]);
    for (std::size_t k = 0; k < others_.size(); ++k)
        m.add_state("s" + std::to_string(k + 2), ranked_[others_[k]]);
    for (std::size_t a = 0; a < rel_pos_.size(); ++a) {
        const std::uint64_t r = relations_[rel_pos_[a]];
        for (std::size_t u = 0; u < n_; ++u) {
            std::vector<std::size_t> succ;
            for (std::size_t v = 0; v < n_; ++v)
                if (r & bit(n_, u, v))
                    succ.push_back(v);
            m.set_successors(a, u, std::move(succ));
        }
    }
    return {std::move(m), 0};
}

std::vector<std::uint64_t> ExplicitGenerator::canonical_key() const
{
    // Interpretations are already in canonical (nondecreasing) order, so only
    // permutations inside runs of equal interpretations can produce an
    // isomorphic copy; take the least relation encoding among them.
    const std::size_t n = n_;
    std::vector<std::pair<std::size_t, std::size_t>> groups;  // [begin, end) over state indices
    for (std::size_t k = 0; k < others_.size();) {
        std::size_t e = k + 1;
        while (e < others_.size() && others_[e] == others_[k])
            ++e;
        if (e - k > 1)
            groups.emplace_back(k + 1, e + 1);
        k = e;
    }
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::uint64_t> best;
    for (;;) {
        std::vector<std::uint64_t> enc;
        for (std::size_t pos : rel_pos_) {
            const std::uint64_t r = relations_[pos];
            std::uint64_t mapped = 0;
            for (std::size_t u = 0; u < n; ++u)
                for (std::size_t v = 0; v < n; ++v)
                    if (r & bit(n, u, v))
                        mapped |= bit(n, perm[u], perm[v]);
            enc.push_back(mapped);
        }
        if (best.empty() || enc < best)
            best = std::move(enc);
        bool advanced = false;
        for (std::size_t g = groups.size(); g-- > 0;) {
            auto first = perm.begin() + static_cast<std::ptrdiff_t>(groups[g].first);
            auto last = perm.begin() + static_cast<std::ptrdiff_t>(groups[g].second);
            if (std::next_permutation(first, last)) {
                advanced = true;
                break;
            }
        }
        if (!advanced)
            break;
    }
    std::vector<std::uint64_t> key{n_, real_pos_};
    key.insert(key.end(), others_.begin(), others_.end());
    key.insert(key.end(), best.begin(), best.end());
    return key;
}

std::optional<PointedStructure> ExplicitGenerator::next()
{
    for (;;) {
        if (exhausted_)
            return std::nullopt;
        if (!fresh_ && !advance())
            continue;
        fresh_ = false;
        ++examined_;
        PointedStructure p = build();
        bool ok = true;
        for (const auto& f : modal_inits_)
            if (!entails(p, f)) {
                ok = false;
                break;
            }
        if (!ok)
            continue;
        if (!seen_.insert(canonical_key()).second)
            continue;
        return p;
    }
}

std::vector<PointedStructure> generate_explicit(const lang::GroundDomain& d, const GenConfig& cfg)
{
    ExplicitGenerator gen(d, cfg);
    std::vector<PointedStructure> out;
    while (cfg.limit == 0 || out.size() < cfg.limit) {
        auto p = gen.next();
        if (!p)
            break;
        out.push_back(std::move(*p));
    }
    return out;
}

namespace {

std::string value_name(const std::string& var, std::int64_t v)
{
    return var + (v < 0 ? "m" + std::to_string(-v) : std::to_string(v));
}

} // namespace

KripkeStructure generate_partition(const std::vector<AgentId>& agents, const lang::UniverseSpec& u, Execution exec)
{
    const std::size_t nv = u.variables.size();
    if (nv == 0)
        throw ArgumentError("the universe declares no variables");
    std::vector<std::string> names;
    for (const auto& v : u.variables)
        names.push_back(v.name);

    // satisfying assignments, first variable most significant
    std::vector<std::vector<std::int64_t>> states;
    std::vector<std::int64_t> cur(nv);
    for (std::size_t i = 0; i < nv; ++i)
        cur[i] = u.variables[i].low;
    auto lookup = [&](const std::vector<std::int64_t>& vals) {
        return [&names, &vals](const std::string& name) -> std::int64_t {
            for (std::size_t i = 0; i < names.size(); ++i)
                if (names[i] == name)
                    return vals[i];
            throw ArgumentError("unknown universe variable '" + name + "'");
        };
    };
    for (;;) {
        bool ok = true;
        for (const auto& c : u.constraints)
            if (c.evaluate(lookup(cur)) == 0) {
                ok = false;
                break;
            }
        if (ok)
            states.push_back(cur);
        std::size_t i = nv;
        while (i > 0 && cur[i - 1] == u.variables[i - 1].high) {
            cur[i - 1] = u.variables[i - 1].low;
            --i;
        }
        if (i == 0)
            break;
        ++cur[i - 1];
    }
    if (states.empty())
        throw ArgumentError("the universe is empty");

    // derived values may be referenced by observations and become fluents too
    std::vector<std::string> all_names = names;
    for (const auto& d : u.derived)
        all_names.push_back(d.name);
    std::vector<std::vector<std::int64_t>> values(states.size());
    for (std::size_t s = 0; s < states.size(); ++s) {
        values[s] = states[s];
        for (const auto& d : u.derived)
            values[s].push_back(d.value.evaluate(lookup(states[s])));
    }
    auto full_lookup = [&](std::size_t s) {
        return [&, s](const std::string& name) -> std::int64_t {
            for (std::size_t i = 0; i < all_names.size(); ++i)
                if (all_names[i] == name)
                    return values[s][i];
            throw ArgumentError("unknown universe name '" + name + "'");
        };
    };

    std::set<FluentAtom> fluent_set;
    for (const auto& vals : values)
        for (std::size_t i = 0; i < all_names.size(); ++i)
            fluent_set.insert(FluentAtom{all_names[i], {Term::integer(vals[i])}});
    auto sig = std::make_shared<const Signature>(agents, std::vector<FluentAtom>(fluent_set.begin(), fluent_set.end()));

    KripkeStructure m(sig);
    for (std::size_t s = 0; s < states.size(); ++s) {
        Interpretation pi(sig->fluent_count());
        std::string name;
        for (std::size_t i = 0; i < all_names.size(); ++i) {
            pi.set(sig->require_fluent(FluentAtom{all_names[i], {Term::integer(values[s][i])}}), true);
            if (i < nv)
                name += (i > 0 ? "_" : "") + value_name(all_names[i], values[s][i]);
        }
        m.add_state(std::move(name), std::move(pi));
    }

    const bool parallel = exec == Execution::parallel ||
                          (exec == Execution::automatic && states.size() >= kernels::parallel_threshold);
    for (std::size_t a = 0; a < sig->agent_count(); ++a) {
        std::vector<std::int64_t> keys(states.size(), 0);
        for (const auto& o : u.observations)
            if (o.agent == sig->agents()[a])
                for (std::size_t s = 0; s < states.size(); ++s)
                    keys[s] = o.key.evaluate(full_lookup(s));
        auto succ = parallel ? kernels::equal_key_successors_parallel(keys)
                             : kernels::equal_key_successors_serial(keys);
        for (std::size_t s = 0; s < states.size(); ++s)
            m.set_successors(a, s, std::move(succ[s]));
    }
    return m;
}

KripkeStructure filter_states(const KripkeStructure& m, const Formula& phi, Execution exec)
{
    StateLabels drop = label_states(m, phi, exec);
    for (auto& c : drop)
        c = !c;
    return state_remove(m, std::vector<char>(drop.begin(), drop.end()));
}

KripkeStructure announcement_chain(const KripkeStructure& m, const std::vector<Formula>& phis,
                                   std::vector<std::size_t>* sizes, Execution exec)
{
    KripkeStructure cur = m;
    for (const auto& phi : phis) {
        cur = filter_states(cur, phi, exec);
        if (sizes != nullptr)
            sizes->push_back(cur.size());
    }
    return cur;
}

} // namespace mak
