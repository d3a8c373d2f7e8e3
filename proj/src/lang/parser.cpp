#include "mak/lang/parser.hpp"

#include "mak/errors.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <set>
#include <unordered_set>

namespace mak::lang {

namespace {

struct Token {
    enum class Kind { ident, integer, punct, end };
    Kind kind = Kind::end;
    std::string text;
    std::int64_t value = 0;
    std::size_t line = 1;
    std::size_t column = 1;
};

std::vector<Token> tokenize(std::string_view src)
{
    static const char* const two_char[] = {"->", "..", "<=", ">=", "!=", "=="};
    static const std::string_view one_char = "()[],.;&|~+-*<>=";

    std::vector<Token> out;
    std::size_t line = 1;
    std::size_t col = 1;
    std::size_t i = 0;
    auto advance = [&](std::size_t n) {
        for (std::size_t k = 0; k < n; ++k, ++i) {
            if (src[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
    };
    while (i < src.size()) {
        const char ch = src[i];
        if (std::isspace(static_cast<unsigned char>(ch))) {
            advance(1);
            continue;
        }
        if (ch == '%') {
            while (i < src.size() && src[i] != '\n')
                advance(1);
            continue;
        }
        Token t;
        t.line = line;
        t.column = col;
        if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
            std::size_t j = i;
            while (j < src.size() && (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_'))
                ++j;
            t.kind = Token::Kind::ident;
            t.text = std::string(src.substr(i, j - i));
            advance(j - i);
            out.push_back(std::move(t));
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(ch))) {
            std::size_t j = i;
            while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j])))
                ++j;
            t.kind = Token::Kind::integer;
            t.text = std::string(src.substr(i, j - i));
            if (t.text.size() > 18)
                throw ParseError(line, col, "integer literal too large");
            t.value = std::stoll(t.text);
            advance(j - i);
            out.push_back(std::move(t));
            continue;
        }
        bool matched = false;
        for (const char* op : two_char)
            if (src.substr(i, 2) == op) {
                t.kind = Token::Kind::punct;
                t.text = op;
                advance(2);
                matched = true;
                break;
            }
        if (!matched && one_char.find(ch) != std::string_view::npos) {
            t.kind = Token::Kind::punct;
            t.text = std::string(1, ch);
            advance(1);
            matched = true;
        }
        if (!matched)
            throw ParseError(line, col, std::string("unexpected character '") + ch + "'");
        out.push_back(std::move(t));
    }
    Token end;
    end.line = line;
    end.column = col;
    out.push_back(end);
    return out;
}

const std::unordered_set<std::string> decl_keywords = {
    "agent", "fluent", "system", "init", "var", "constraint", "observes", "derive", "announce",
};

// `X` in `fluent(p(X))` ranges over agents; `2..5` over integers
struct PatternArg {
    Term term;
    bool range = false;
    std::int64_t low = 0;
    std::int64_t high = 0;
};

struct FluentPattern {
    std::string functor;
    std::vector<PatternArg> args;
    std::size_t line = 0;
    std::size_t column = 0;
};

class Parser {
public:
    explicit Parser(std::string_view text) : toks_(tokenize(text)) {}

    Domain parse_domain();
    Formula parse_single_formula();
    std::pair<Formula, std::vector<ActionTerm>> parse_query_text();

private:
    const Token& peek(std::size_t ahead = 0) const { return toks_[std::min(pos_ + ahead, toks_.size() - 1)]; }
    const Token& next() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }

    bool at_punct(std::string_view p, std::size_t ahead = 0) const
    {
        return peek(ahead).kind == Token::Kind::punct && peek(ahead).text == p;
    }
    bool at_ident(std::string_view w, std::size_t ahead = 0) const
    {
        return peek(ahead).kind == Token::Kind::ident && peek(ahead).text == w;
    }
    bool accept_punct(std::string_view p)
    {
        if (!at_punct(p))
            return false;
        next();
        return true;
    }
    bool accept_ident(std::string_view w)
    {
        if (!at_ident(w))
            return false;
        next();
        return true;
    }

    [[noreturn]] void fail(const Token& t, const std::string& expected) const
    {
        std::string found = t.kind == Token::Kind::end ? "end of input" : "'" + t.text + "'";
        throw ParseError(t.line, t.column, "expected " + expected + ", found " + found);
    }
    void expect_punct(std::string_view p)
    {
        if (!accept_punct(p))
            fail(peek(), "'" + std::string(p) + "'");
    }
    void expect_ident(std::string_view w)
    {
        if (!accept_ident(w))
            fail(peek(), "'" + std::string(w) + "'");
    }
    std::string identifier(const std::string& what)
    {
        if (peek().kind != Token::Kind::ident)
            fail(peek(), what);
        return next().text;
    }
    std::int64_t integer()
    {
        const bool neg = accept_punct("-");
        if (peek().kind != Token::Kind::integer)
            fail(peek(), "integer");
        const auto v = next().value;
        return neg ? -v : v;
    }

    Term term_arg();
    FluentAtom fluent_atom();
    ActionTerm action_term();
    std::vector<AgentId> agent_group();

    Formula formula();
    Formula disjunction();
    Formula conjunction();
    Formula unary();
    Formula primary();

    Expr expr();
    Expr additive();
    Expr multiplicative();
    Expr expr_primary();

    void statement(Domain& d);
    void declaration(Domain& d, const Token& head);
    void law(Domain& d);
    std::vector<AgentId> performer_clause(const std::string& keyword, const std::string& split_keyword);

    void finish(Domain& d);

    std::vector<Token> toks_;
    std::size_t pos_ = 0;

    std::vector<FluentPattern> patterns_;
    std::vector<std::pair<Formula, std::size_t>> init_lines_;
    std::vector<std::pair<Formula, std::size_t>> announce_lines_;
    std::vector<std::pair<Expr, std::size_t>> expr_lines_;
    std::vector<std::pair<AgentId, std::size_t>> observer_lines_;
    std::size_t system_line_ = 0;
};

Term Parser::term_arg()
{
    if (peek().kind == Token::Kind::integer || at_punct("-"))
        return Term::integer(integer());
    return Term::symbol(identifier("constant or variable"));
}

FluentAtom Parser::fluent_atom()
{
    FluentAtom f;
    f.functor = identifier("fluent");
    if (accept_punct("(")) {
        do
            f.args.push_back(term_arg());
        while (accept_punct(","));
        expect_punct(")");
    }
    return f;
}

ActionTerm Parser::action_term()
{
    ActionTerm a;
    a.name = identifier("action name");
    if (accept_punct("(")) {
        do
            a.args.push_back(term_arg());
        while (accept_punct(","));
        expect_punct(")");
    }
    return a;
}

std::vector<AgentId> Parser::agent_group()
{
    std::vector<AgentId> out;
    if (accept_punct("[")) {
        if (!at_punct("]"))
            do
                out.push_back(identifier("agent"));
            while (accept_punct(","));
        expect_punct("]");
    } else {
        out.push_back(identifier("agent or '['"));
    }
    return out;
}

Formula Parser::formula()
{
    Formula lhs = disjunction();
    if (accept_punct("->"))
        return Formula::implication(lhs, formula());
    return lhs;
}

Formula Parser::disjunction()
{
    Formula f = conjunction();
    while (accept_punct("|"))
        f = Formula::disjunction(f, conjunction());
    return f;
}

Formula Parser::conjunction()
{
    Formula f = unary();
    while (at_punct("&") || at_punct(",")) {
        next();
        f = Formula::conjunction(f, unary());
    }
    return f;
}

Formula Parser::unary()
{
    if (accept_punct("~"))
        return Formula::negation(unary());
    return primary();
}

Formula Parser::primary()
{
    if (accept_punct("(")) {
        Formula f = formula();
        expect_punct(")");
        return f;
    }
    if (peek().kind != Token::Kind::ident)
        fail(peek(), "formula");
    const Token& t = peek();
    if (t.text == "true" && !at_punct("(", 1)) {
        next();
        return Formula::top();
    }
    if (t.text == "false" && !at_punct("(", 1)) {
        next();
        return Formula::bottom();
    }
    if (at_punct("(", 1)) {
        if (t.text == "k") {
            next();
            next();
            AgentId agent = identifier("agent");
            expect_punct(",");
            Formula f = formula();
            expect_punct(")");
            return Formula::knows(std::move(agent), f);
        }
        if (t.text == "e" || t.text == "c") {
            const bool everyone = t.text == "e";
            const Token at = t;
            next();
            next();
            auto group = agent_group();
            if (group.empty())
                throw ParseError(at.line, at.column, "empty agent group");
            expect_punct(",");
            Formula f = formula();
            expect_punct(")");
            return everyone ? Formula::everyone(std::move(group), f) : Formula::common(std::move(group), f);
        }
        if (t.text == "kv") {
            next();
            next();
            AgentId agent = identifier("agent");
            expect_punct(",");
            std::string family = identifier("fluent family");
            expect_punct(")");
            return Formula::knows_value(std::move(agent), std::move(family));
        }
    }
    return Formula::atom(fluent_atom());
}

Expr Parser::expr()
{
    Expr lhs = additive();
    static const std::pair<const char*, Expr::Op> cmp[] = {
        {"<", Expr::Op::lt}, {"<=", Expr::Op::le}, {">", Expr::Op::gt},  {">=", Expr::Op::ge},
        {"=", Expr::Op::eq}, {"==", Expr::Op::eq}, {"!=", Expr::Op::ne},
    };
    for (const auto& [text, op] : cmp)
        if (accept_punct(text))
            return Expr::binary(op, lhs, additive());
    return lhs;
}

Expr Parser::additive()
{
    Expr e = multiplicative();
    for (;;) {
        if (accept_punct("+"))
            e = Expr::binary(Expr::Op::add, e, multiplicative());
        else if (accept_punct("-"))
            e = Expr::binary(Expr::Op::sub, e, multiplicative());
        else
            return e;
    }
}

Expr Parser::multiplicative()
{
    Expr e = expr_primary();
    while (accept_punct("*"))
        e = Expr::binary(Expr::Op::mul, e, expr_primary());
    return e;
}

Expr Parser::expr_primary()
{
    if (accept_punct("(")) {
        Expr e = expr();
        expect_punct(")");
        return e;
    }
    if (peek().kind == Token::Kind::integer || at_punct("-"))
        return Expr::constant(integer());
    return Expr::variable(identifier("expression"));
}

std::vector<AgentId> Parser::performer_clause(const std::string& keyword, const std::string& split_keyword)
{
    // `performed_by X` or `performed by X`
    if (!accept_ident(keyword + "_by")) {
        if (!at_ident(keyword))
            fail(peek(), "'" + keyword + "_by'");
        next();
        expect_ident(split_keyword);
    }
    return agent_group();
}

std::vector<Literal> as_literals(const Formula& f, const Token& at, const char* what, bool allow_true)
{
    std::vector<Literal> out;
    std::vector<Formula> parts;
    // flatten the conjunction tree, keeping left-to-right order
    std::function<void(const Formula&)> flatten = [&](const Formula& g) {
        if (g.kind() == Formula::Kind::conjunction) {
            flatten(g.lhs());
            flatten(g.rhs());
        } else {
            parts.push_back(g);
        }
    };
    flatten(f);
    for (const auto& p : parts) {
        if (p.kind() == Formula::Kind::top && allow_true)
            continue;
        if (p.kind() == Formula::Kind::atom)
            out.push_back({p.fluent(), true});
        else if (p.kind() == Formula::Kind::negation && p.operand().kind() == Formula::Kind::atom)
            out.push_back({p.operand().fluent(), false});
        else
            throw ParseError(at.line, at.column, std::string(what) + " must be a conjunction of fluent literals");
    }
    return out;
}

void Parser::law(Domain& d)
{
    const Token head = peek();
    ActionLaw law;
    law.line = head.line;
    law.action = action_term();
    if (at_ident("executable") && at_ident("if", 1)) {
        next();
        next();
        law.kind = LawKind::executable;
        law.condition = formula();
    } else if (accept_ident("executable_if")) {
        law.kind = LawKind::executable;
        law.condition = formula();
    } else if (accept_ident("causes")) {
        law.kind = LawKind::causes;
        const Token at = peek();
        law.effect = as_literals(formula(), at, "effect", false);
        if (law.effect.empty())
            throw ParseError(at.line, at.column, "effect must name at least one literal");
        if (accept_ident("if")) {
            const Token cond_at = peek();
            law.condition = formula();
            law.guard = as_literals(law.condition, cond_at, "condition", true);
        } else {
            law.condition = Formula::top();
        }
        law.performers = performer_clause("performed", "by");
    } else if (accept_ident("announces")) {
        law.kind = LawKind::announces;
        law.payload = formula();
        law.performers = performer_clause("performed", "by");
        if (at_ident("observed_by") || at_ident("observed"))
            law.observers = performer_clause("observed", "by");
    } else if (accept_ident("determines")) {
        law.kind = LawKind::determines;
        law.sensed = fluent_atom();
        law.performers = performer_clause("performed", "by");
        if (at_ident("observed_by") || at_ident("observed"))
            law.observers = performer_clause("observed", "by");
    } else {
        fail(peek(), "'executable_if', 'causes', 'announces' or 'determines'");
    }
    if (law.kind != LawKind::executable && law.performers.empty())
        throw ParseError(head.line, head.column, "empty performer set");
    d.laws.push_back(std::move(law));
}

void Parser::declaration(Domain& d, const Token& head)
{
    const std::string kw = next().text;
    expect_punct("(");
    if (kw == "agent") {
        do {
            auto a = identifier("agent name");
            if (is_variable_name(a))
                throw ParseError(head.line, head.column, "agent names must start with a lowercase letter");
            if (std::find(d.agents.begin(), d.agents.end(), a) == d.agents.end())
                d.agents.push_back(a);
        } while (accept_punct(","));
    } else if (kw == "fluent") {
        do {
            FluentPattern p;
            p.line = peek().line;
            p.column = peek().column;
            p.functor = identifier("fluent name");
            if (accept_punct("(")) {
                do {
                    PatternArg a;
                    if (peek().kind == Token::Kind::integer || at_punct("-")) {
                        const auto lo = integer();
                        if (accept_punct("..")) {
                            a.range = true;
                            a.low = lo;
                            a.high = integer();
                        } else {
                            a.term = Term::integer(lo);
                        }
                    } else {
                        a.term = Term::symbol(identifier("fluent argument"));
                    }
                    p.args.push_back(a);
                } while (accept_punct(","));
                expect_punct(")");
            }
            patterns_.push_back(std::move(p));
        } while (accept_punct(","));
    } else if (kw == "system") {
        const Token at = peek();
        auto s = identifier("system name");
        if (d.system)
            throw ParseError(at.line, at.column, "duplicate system declaration");
        if (!frame_class_for_system(s))
            throw ParseError(at.line, at.column, "unknown system '" + s + "' (expected t, s4, s5, kd45 or none)");
        d.system = s;
        system_line_ = at.line;
    } else if (kw == "init") {
        auto f = formula();
        d.inits.push_back(f);
        init_lines_.emplace_back(f, head.line);
    } else if (kw == "var") {
        VarRange v;
        v.name = identifier("variable name");
        expect_punct(",");
        v.low = integer();
        expect_punct("..");
        v.high = integer();
        if (v.low > v.high)
            throw ParseError(head.line, head.column, "empty range for '" + v.name + "'");
        for (const auto& w : d.universe.variables)
            if (w.name == v.name)
                throw ParseError(head.line, head.column, "duplicate variable '" + v.name + "'");
        d.universe.variables.push_back(std::move(v));
    } else if (kw == "constraint") {
        do {
            auto e = expr();
            d.universe.constraints.push_back(e);
            expr_lines_.emplace_back(e, head.line);
        } while (accept_punct(",") || accept_punct("&"));
    } else if (kw == "observes") {
        auto agent = identifier("agent");
        expect_punct(",");
        auto e = expr();
        d.universe.observations.push_back({agent, e});
        expr_lines_.emplace_back(e, head.line);
        observer_lines_.emplace_back(agent, head.line);
    } else if (kw == "derive") {
        auto name = identifier("derived name");
        expect_punct(",");
        auto e = expr();
        d.universe.derived.push_back({name, e});
        expr_lines_.emplace_back(e, head.line);
    } else if (kw == "announce") {
        auto f = formula();
        d.universe.announcements.push_back(f);
        announce_lines_.emplace_back(f, head.line);
    }
    expect_punct(")");
}

void Parser::statement(Domain& d)
{
    const Token& head = peek();
    if (head.kind == Token::Kind::ident && decl_keywords.count(head.text) != 0 && at_punct("(", 1)) {
        const Token h = head;
        declaration(d, h);
    } else {
        law(d);
    }
    expect_punct(".");
}

bool is_public_shape(const Formula& f)
{
    using K = Formula::Kind;
    if (f.is_fluent_formula() || f.kind() == K::knows)
        return true;
    // ~(k(i, psi) | k(i, ~psi))
    if (f.kind() != K::negation || f.operand().kind() != K::disjunction)
        return false;
    const Formula& l = f.operand().lhs();
    const Formula& r = f.operand().rhs();
    return l.kind() == K::knows && r.kind() == K::knows && l.agent() == r.agent() &&
           r.operand().kind() == K::negation && r.operand().operand() == l.operand();
}

std::vector<std::string> law_variables(const ActionLaw& law)
{
    std::vector<std::string> vars;
    auto add_terms = [&](const std::vector<Term>& args) {
        for (const auto& t : args)
            if (t.is_variable())
                vars.push_back(t.name());
    };
    auto add_formula = [&](const Formula& f) {
        std::vector<FluentAtom> atoms;
        f.collect_atoms(atoms);
        for (const auto& a : atoms)
            add_terms(a.args);
        std::vector<AgentId> agents;
        f.collect_agents(agents);
        for (const auto& a : agents)
            if (is_variable_name(a))
                vars.push_back(a);
    };
    add_formula(law.condition);
    add_formula(law.payload);
    for (const auto& l : law.effect)
        add_terms(l.atom.args);
    add_terms(law.sensed.args);
    for (const auto& a : law.performers)
        if (is_variable_name(a))
            vars.push_back(a);
    for (const auto& a : law.observers)
        if (is_variable_name(a))
            vars.push_back(a);
    return vars;
}

void Parser::finish(Domain& d)
{
    // expand fluent patterns now that every agent is known
    for (const auto& p : patterns_) {
        std::vector<std::vector<Term>> choices;
        for (const auto& a : p.args) {
            std::vector<Term> c;
            if (a.range) {
                if (a.high < a.low)
                    throw ParseError(p.line, p.column, "empty range in fluent declaration");
                for (auto v = a.low; v <= a.high; ++v)
                    c.push_back(Term::integer(v));
            } else if (a.term.is_variable()) {
                for (const auto& ag : d.agents)
                    c.push_back(Term::symbol(ag));
            } else {
                c.push_back(a.term);
            }
            choices.push_back(std::move(c));
        }
        std::vector<std::size_t> odo(choices.size(), 0);
        const bool none = std::any_of(choices.begin(), choices.end(), [](const auto& c) { return c.empty(); });
        while (!none) {
            FluentAtom f{p.functor, {}};
            for (std::size_t i = 0; i < choices.size(); ++i)
                f.args.push_back(choices[i][odo[i]]);
            if (std::find(d.fluents.begin(), d.fluents.end(), f) == d.fluents.end())
                d.fluents.push_back(std::move(f));
            std::size_t i = choices.size();
            while (i > 0 && ++odo[i - 1] == choices[i - 1].size())
                odo[--i] = 0;
            if (i == 0)
                break;
        }
    }

    const std::set<AgentId> agents(d.agents.begin(), d.agents.end());
    const std::set<FluentAtom> fluents(d.fluents.begin(), d.fluents.end());
    std::set<std::pair<std::string, std::size_t>> shapes;  // functor/arity of declared fluents
    std::set<std::string> families;
    for (const auto& f : d.fluents) {
        shapes.emplace(f.functor, f.args.size());
        if (!f.args.empty())
            families.insert(f.functor);
    }
    // universe variables and derived values become one-argument families
    std::set<std::string> universe_names;
    for (const auto& v : d.universe.variables)
        universe_names.insert(v.name);
    for (const auto& dv : d.universe.derived) {
        if (!universe_names.insert(dv.name).second)
            throw ParseError(0, 0, "derived name '" + dv.name + "' clashes with another universe name");
    }

    auto where = [](std::size_t line) { return "line " + std::to_string(line) + ": "; };
    auto check_agent = [&](const AgentId& a, std::size_t line) {
        if (!is_variable_name(a) && agents.count(a) == 0)
            throw DeclarationError(where(line) + "undeclared agent '" + a + "'");
    };
    auto check_atom = [&](const FluentAtom& f, std::size_t line, bool universe) {
        if (universe && universe_names.count(f.functor) != 0 && f.args.size() == 1 && f.args[0].is_integer())
            return;
        if (f.is_ground() ? fluents.count(f) != 0 : shapes.count({f.functor, f.args.size()}) != 0)
            return;
        throw DeclarationError(where(line) + "undeclared fluent '" + f.to_string() + "'");
    };
    auto check_formula = [&](const Formula& f, std::size_t line, bool universe) {
        std::vector<FluentAtom> atoms;
        f.collect_atoms(atoms);
        for (const auto& a : atoms)
            check_atom(a, line, universe);
        std::vector<AgentId> ags;
        f.collect_agents(ags);
        for (const auto& a : ags)
            check_agent(a, line);
        std::function<void(const Formula&)> families_of = [&](const Formula& g) {
            using K = Formula::Kind;
            switch (g.kind()) {
            case K::knows_value:
                if (families.count(g.family()) == 0 && !(universe && universe_names.count(g.family()) != 0))
                    throw DeclarationError(where(line) + "undeclared fluent family '" + g.family() + "'");
                return;
            case K::negation:
            case K::knows:
            case K::everyone:
            case K::common:
                families_of(g.operand());
                return;
            case K::conjunction:
            case K::disjunction:
            case K::implication:
                families_of(g.lhs());
                families_of(g.rhs());
                return;
            default:
                return;
            }
        };
        families_of(f);
    };

    for (const auto& [f, line] : init_lines_) {
        check_formula(f, line, false);
        std::vector<AgentId> ags;
        f.collect_agents(ags);
        for (const auto& a : ags)
            if (is_variable_name(a))
                throw ParseError(line, 1, "init axioms must be ground");
        std::vector<FluentAtom> atoms;
        f.collect_atoms(atoms);
        for (const auto& a : atoms)
            if (!a.is_ground())
                throw ParseError(line, 1, "init axioms must be ground");
    }
    for (const auto& [f, line] : announce_lines_)
        check_formula(f, line, true);
    for (const auto& [agent, line] : observer_lines_)
        if (agents.count(agent) == 0)
            throw DeclarationError(where(line) + "undeclared agent '" + agent + "'");
    std::set<std::string> vars;
    for (const auto& v : d.universe.variables)
        vars.insert(v.name);
    for (const auto& [e, line] : expr_lines_) {
        std::vector<std::string> names;
        e.collect_variables(names);
        for (const auto& n : names)
            if (universe_names.count(n) == 0)
                throw DeclarationError(where(line) + "undeclared universe variable '" + n + "'");
    }
    for (const auto& dv : d.universe.derived) {
        std::vector<std::string> names;
        dv.value.collect_variables(names);
        for (const auto& n : names)
            if (vars.count(n) == 0)
                throw ParseError(0, 0, "derived value '" + dv.name + "' may only use declared variables");
    }

    for (const auto& law : d.laws) {
        const std::size_t line = law.line;
        std::set<std::string> bound;
        for (const auto& t : law.action.args)
            if (t.is_variable())
                bound.insert(t.name());
        for (const auto& v : law_variables(law))
            if (bound.count(v) == 0)
                throw ParseError(line, 1, "variable '" + v + "' does not occur in " + law.action.to_string());
        check_formula(law.condition, line, false);
        for (const auto& a : law.performers)
            check_agent(a, line);
        for (const auto& a : law.observers)
            check_agent(a, line);
        switch (law.kind) {
        case LawKind::executable:
            break;
        case LawKind::causes:
            for (const auto& l : law.effect)
                check_atom(l.atom, line, false);
            break;
        case LawKind::announces: {
            check_formula(law.payload, line, false);
            if (!is_public_shape(law.payload))
                throw ParseError(line, 1,
                                 "malformed announcement: expected a fluent formula, k(i, phi) or "
                                 "~(k(i, phi) | k(i, ~phi))");
            // with schema variables the public/private split is only known after grounding
            auto variable = [](const AgentId& a) { return is_variable_name(a); };
            if (!law.payload.is_literal() && std::none_of(law.performers.begin(), law.performers.end(), variable) &&
                std::none_of(law.observers.begin(), law.observers.end(), variable)) {
                const std::set<AgentId> who(law.performers.begin(), law.performers.end());
                if (who.size() != agents.size() || !law.observers.empty())
                    throw ParseError(line, 1, "malformed announcement: a private announcement must be a fluent literal");
            }
            break;
        }
        case LawKind::determines:
            check_atom(law.sensed, line, false);
            break;
        }
    }
}

Domain Parser::parse_domain()
{
    Domain d;
    while (peek().kind != Token::Kind::end)
        statement(d);
    finish(d);
    return d;
}

Formula Parser::parse_single_formula()
{
    Formula f = formula();
    if (peek().kind != Token::Kind::end)
        fail(peek(), "end of formula");
    return f;
}

std::pair<Formula, std::vector<ActionTerm>> Parser::parse_query_text()
{
    Formula goal = formula();
    std::vector<ActionTerm> actions;
    if (accept_ident("after")) {
        expect_punct("[");
        if (!at_punct("]"))
            do
                actions.push_back(action_term());
            while (accept_punct(";") || accept_punct(","));
        expect_punct("]");
    }
    if (peek().kind != Token::Kind::end)
        fail(peek(), "'after' or end of query");
    return {goal, actions};
}

} // namespace

Domain parse_domain(std::string_view text)
{
    return Parser(text).parse_domain();
}

Formula parse_formula(std::string_view text)
{
    return Parser(text).parse_single_formula();
}

Query parse_query(std::string_view text, const GroundDomain& d)
{
    auto [goal, terms] = Parser(text).parse_query_text();
    Query q{goal, {}};
    for (const auto& t : terms) {
        if (!t.is_ground())
            throw ParseError(1, 1, "query actions must be ground: " + t.to_string());
        const ActionInstance* a = d.find(t);
        if (a == nullptr)
            throw ParseError(1, 1, "unknown action '" + t.to_string() + "'");
        q.actions.push_back(a);
    }
    return q;
}

} // namespace mak::lang
