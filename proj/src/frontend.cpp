// Copyright (c) gcsmc contributors.
// SPDX-License-Identifier: Apache-2.0
#include "gcs/frontend.hpp"

#include <algorithm>
#include <charconv>
#include <set>
#include <sstream>

#include <json.hpp>

#include "gcs/error.hpp"

namespace gcs {

namespace {

using json = nlohmann::json;

struct Token {
    enum class Kind { Ident, Int, Punct, End };
    Kind kind = Kind::End;
    std::string text;
    bool primed = false;  // Ident immediately followed by '
    std::size_t line = 1;
    std::size_t col = 1;
};

std::vector<Token> lex(std::string_view src) {
    std::vector<Token> out;
    std::size_t line = 1;
    std::size_t col = 1;
    std::size_t i = 0;
    auto advance = [&](std::size_t n) {
        for (std::size_t k = 0; k < n; ++k) {
            if (src[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
            ++i;
        }
    };
    auto ident_char = [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; };
    while (i < src.size()) {
        const char c = src[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            advance(1);
            continue;
        }
        if (c == '#' || (c == '/' && i + 1 < src.size() && src[i + 1] == '/')) {
            while (i < src.size() && src[i] != '\n') advance(1);
            continue;
        }
        Token t;
        t.line = line;
        t.col = col;
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i;
            while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
            if (j < src.size() && ident_char(src[j])) throw ParseError(line, col, "malformed number");
            t.kind = Token::Kind::Int;
            t.text = std::string(src.substr(i, j - i));
            advance(j - i);
        } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t j = i;
            while (j < src.size() && ident_char(src[j])) ++j;
            t.kind = Token::Kind::Ident;
            t.text = std::string(src.substr(i, j - i));
            advance(j - i);
            if (i < src.size() && src[i] == '\'') {
                t.primed = true;
                advance(1);
            }
        } else {
            t.kind = Token::Kind::Punct;
            const auto two = src.substr(i, 2);
            if (two == ">=" || two == "<=") {
                t.text = std::string(two);
                advance(2);
            } else if (std::string_view("-<>=&|!()[]{},;:.").find(c) != std::string_view::npos) {
                t.text = std::string(1, c);
                advance(1);
            } else {
                throw ParseError(line, col, std::string("unexpected character '") + c + "'");
            }
        }
        out.push_back(std::move(t));
    }
    Token end;
    end.line = line;
    end.col = col;
    out.push_back(end);
    return out;
}

const std::set<std::string>& formula_keywords() {
    static const std::set<std::string> k{"true", "false", "EF", "AG", "EG", "E", "U"};
    return k;
}

class Parser {
  public:
    explicit Parser(std::string_view src) : toks_(lex(src)) {}

    const Token& peek(std::size_t ahead = 0) const { return toks_[std::min(pos_ + ahead, toks_.size() - 1)]; }
    const Token& next() {
        const Token& t = toks_[pos_];
        if (pos_ + 1 < toks_.size()) ++pos_;
        return t;
    }
    bool at_end() const { return peek().kind == Token::Kind::End; }

    bool is(std::string_view p, std::size_t ahead = 0) const {
        const auto& t = peek(ahead);
        return t.kind == Token::Kind::Punct && t.text == p;
    }
    bool is_word(std::string_view w, std::size_t ahead = 0) const {
        const auto& t = peek(ahead);
        return t.kind == Token::Kind::Ident && !t.primed && t.text == w;
    }
    bool accept(std::string_view p) {
        if (!is(p)) return false;
        next();
        return true;
    }
    bool accept_word(std::string_view w) {
        if (!is_word(w)) return false;
        next();
        return true;
    }

    [[noreturn]] void fail(const std::string& msg) const { fail_at(peek(), msg); }
    [[noreturn]] static void fail_at(const Token& t, const std::string& msg) { throw ParseError(t.line, t.col, msg); }

    static std::string describe(const Token& t) {
        switch (t.kind) {
        case Token::Kind::End: return "end of input";
        case Token::Kind::Int: return "number " + t.text;
        case Token::Kind::Ident: return "'" + t.text + (t.primed ? "'" : "") + "'";
        case Token::Kind::Punct: return "'" + t.text + "'";
        }
        return {};
    }

    void expect(std::string_view p) {
        if (!accept(p)) fail("expected '" + std::string(p) + "', found " + describe(peek()));
    }
    void expect_word(std::string_view w) {
        if (!accept_word(w)) fail("expected '" + std::string(w) + "', found " + describe(peek()));
    }
    void expect_end() {
        if (!at_end()) fail("unexpected " + describe(peek()));
    }

    std::string ident(const char* what) {
        const auto& t = peek();
        if (t.kind != Token::Kind::Ident || t.primed) fail(std::string("expected ") + what + ", found " + describe(t));
        return next().text;
    }

    std::int64_t integer() {
        const bool negative = accept("-");
        const auto& t = peek();
        if (t.kind != Token::Kind::Int) fail("expected an integer, found " + describe(t));
        next();
        // parse with the sign attached so INT64_MIN is representable
        const std::string digits = (negative ? "-" : "") + t.text;
        std::int64_t v = 0;
        const auto [p, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), v);
        if (ec != std::errc() || p != digits.data() + digits.size()) fail_at(t, "integer out of range");
        return v;
    }

    bool at_term() const {
        const auto& t = peek();
        if (t.kind == Token::Kind::Int) return true;
        if (t.kind == Token::Kind::Punct) return t.text == "-" && peek(1).kind == Token::Kind::Int;
        return t.kind == Token::Kind::Ident && (t.primed || !formula_keywords().count(t.text));
    }

    Node term() {
        const auto& t = peek();
        if (t.kind == Token::Kind::Ident) {
            if (!t.primed && formula_keywords().count(t.text)) fail("keyword '" + t.text + "' cannot be a variable");
            next();
            return t.primed ? Node::primed(t.text) : Node::var(t.text);
        }
        if (t.kind == Token::Kind::Int || is("-")) return Node::constant(integer());
        fail("expected a variable or integer, found " + describe(t));
    }

    bool at_comparison() const { return is(">=") || is(">") || is("=") || is("<=") || is("<"); }

    static std::int64_t shift(const Token& where, std::int64_t k, std::int64_t by) {
        std::int64_t out = 0;
        if (__builtin_add_overflow(k, by, &out)) fail_at(where, "offset out of range");
        return out;
    }
    static std::int64_t negated(const Token& where, std::int64_t k) {
        if (k == INT64_MIN) fail_at(where, "offset out of range");
        return -k;
    }

    // a OP b, optionally as a difference a - b OP k.
    static void emit(GapConstraint& out, const Token& op, const Node& a, const Node& b, std::int64_t k) {
        const auto& o = op.text;
        if (o == ">=") {
            out.push_back({a, b, k});
        } else if (o == ">") {
            out.push_back({a, b, shift(op, k, 1)});
        } else if (o == "=") {
            out.push_back({a, b, k});
            out.push_back({b, a, negated(op, k)});
        } else if (o == "<=") {
            out.push_back({b, a, negated(op, k)});
        } else {
            out.push_back({b, a, shift(op, negated(op, k), 1)});
        }
    }

    void clause_chain(GapConstraint& out) {
        Node a = term();
        if (accept("-")) {
            Node b = term();
            if (!at_comparison()) fail("expected a comparison, found " + describe(peek()));
            const Token op = next();
            emit(out, op, a, b, integer());
            return;
        }
        if (!at_comparison()) fail("expected a comparison, found " + describe(peek()));
        while (at_comparison()) {
            const Token op = next();
            Node b = term();
            emit(out, op, a, b, 0);
            a = std::move(b);
        }
    }

    // CLAUSE ((& | ,) CLAUSE)* or `true`, up to a terminator.
    GapConstraint constraint() {
        GapConstraint out;
        if (accept_word("true")) return out;
        clause_chain(out);
        while (accept("&") || accept(",")) clause_chain(out);
        return out;
    }

    GapConstraint guard() {
        expect("{");
        GapConstraint out;
        if (!is("}")) out = constraint();
        expect("}");
        return out;
    }

    // --- formulas ---

    FormulaPtr formula() {
        auto f = conjunction();
        while (accept("|")) f = fm::disj(f, conjunction());
        return f;
    }

    FormulaPtr conjunction() {
        auto f = unary();
        while (accept("&")) f = fm::conj(f, unary());
        return f;
    }

    FormulaPtr unary() {
        if (accept("!")) return fm::neg(unary());
        if (accept("<")) {
            auto a = ident("an action");
            expect(">");
            GapConstraint g;
            if (is("{")) g = guard();
            return fm::diamond(std::move(a), unary(), std::move(g));
        }
        if (accept("[")) {
            auto a = ident("an action");
            expect("]");
            return fm::box(std::move(a), unary());
        }
        if (accept_word("EF")) {
            std::optional<std::vector<std::string>> acts;
            if (accept("[")) {
                acts.emplace();
                if (!is("]")) {
                    acts->push_back(ident("an action"));
                    while (accept(",")) acts->push_back(ident("an action"));
                }
                expect("]");
            }
            GapConstraint g;
            if (is("{")) g = guard();
            return fm::ef(unary(), std::move(g), std::move(acts));
        }
        if (accept_word("AG")) return fm::ag(unary());
        if (accept_word("EG")) return fm::eg(unary());
        if (accept_word("E")) {
            if (accept("(")) {
                auto l = formula();
                expect_word("U");
                auto r = formula();
                expect(")");
                return fm::eu(std::move(l), std::move(r));
            }
            auto l = unary();
            expect_word("U");
            return fm::eu(std::move(l), unary());
        }
        return primary();
    }

    FormulaPtr primary() {
        if (accept_word("true")) return fm::t();
        if (accept_word("false")) return fm::f();
        if (accept("(")) {
            auto f = formula();
            expect(")");
            return f;
        }
        if (!at_term()) fail("expected a formula, found " + describe(peek()));
        GapConstraint cs;
        clause_chain(cs);
        std::vector<FormulaPtr> atoms;
        for (auto& c : cs) atoms.push_back(fm::atom(std::move(c)));
        return atoms.size() == 1 ? atoms.front() : fm::conj(atoms);
    }

    // --- boolean matrices ---

    BoolExprPtr bool_iff() {
        auto e = bool_implies();
        while (is("<") && is("-", 1) && is(">", 2)) {
            next();
            next();
            next();
            e = BoolExpr::iff(e, bool_implies());
        }
        return e;
    }

    BoolExprPtr bool_implies() {
        auto e = bool_or();
        if (is("-") && is(">", 1)) {
            next();
            next();
            return BoolExpr::either(BoolExpr::negate(e), bool_implies());
        }
        return e;
    }

    BoolExprPtr bool_or() {
        auto e = bool_and();
        while (accept("|")) e = BoolExpr::either(e, bool_and());
        return e;
    }

    BoolExprPtr bool_and() {
        auto e = bool_unary();
        while (accept("&")) e = BoolExpr::both(e, bool_unary());
        return e;
    }

    BoolExprPtr bool_unary() {
        if (accept("!")) return BoolExpr::negate(bool_unary());
        if (accept("(")) {
            auto e = bool_iff();
            expect(")");
            return e;
        }
        if (accept_word("true")) return BoolExpr::constant(true);
        if (accept_word("false")) return BoolExpr::constant(false);
        return BoolExpr::variable(ident("a boolean variable"));
    }

  private:
    std::vector<Token> toks_;
    std::size_t pos_ = 0;
};

std::vector<std::string> ident_list(Parser& p) {
    std::vector<std::string> out;
    if (p.is(";")) return out;
    out.push_back(p.ident("a name"));
    while (p.accept(",")) out.push_back(p.ident("a name"));
    return out;
}

void check_formula_symbols(const FormulaPtr& f, const Gcs& g) {
    std::set<const Formula*> seen;
    auto known_node = [&](const Node& n, bool allow_primed, const std::string& where) {
        if (n.kind == Node::Kind::Const) return;
        if (n.kind == Node::Kind::Primed && !allow_primed) {
            throw InvalidInput("primed variable " + n.str() + " outside a guard in " + where);
        }
        if (!g.state_universe()->find_var(n.name)) throw InvalidInput("undeclared variable '" + n.name + "' in " + where);
    };
    auto known_action = [&](const std::string& a) {
        if (!g.has_action(a)) throw InvalidInput("undeclared action '" + a + "'");
    };
    auto go = [&](auto&& self, const FormulaPtr& n) -> void {
        if (!n || !seen.insert(n.get()).second) return;
        if (n->kind == Formula::Kind::Atom) {
            known_node(n->atom.lhs, false, n->atom.str());
            known_node(n->atom.rhs, false, n->atom.str());
        }
        for (const auto& c : n->guard) {
            known_node(c.lhs, true, c.str());
            known_node(c.rhs, true, c.str());
        }
        if (n->kind == Formula::Kind::Diamond || n->kind == Formula::Kind::Box) known_action(n->action);
        if (n->actions) {
            for (const auto& a : *n->actions) known_action(a);
        }
        self(self, n->lhs);
        self(self, n->rhs);
    };
    go(go, f);
}

std::string join(const std::vector<std::string>& xs, const char* sep) {
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) out += sep;
        out += xs[i];
    }
    return out;
}

Node node_from_name(const std::string& s) {
    if (s.empty()) throw InvalidInput("empty node name");
    std::int64_t v = 0;
    const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec == std::errc() && p == s.data() + s.size()) return Node::constant(v);
    if (s.back() == '\'') return Node::primed(s.substr(0, s.size() - 1));
    return Node::var(s);
}

json mg_json(const MonotonicityGraph& m) {
    const auto c = closure(m);
    const auto& u = *c.universe();
    json nodes = json::array();
    for (std::size_t i = 0; i < u.size(); ++i) nodes.push_back(u.node(i).str());
    json edges = json::array();
    for (const auto& e : c.edges()) {
        json w = e.weight.is_finite() ? json(e.weight.raw()) : json(e.weight.str());
        edges.push_back({{"from", u.node(e.from).str()}, {"to", u.node(e.to).str()}, {"weight", w}});
    }
    return {{"nodes", nodes}, {"edges", edges}};
}

MonotonicityGraph mg_from(const json& j, const UniversePtr& u) {
    if (!j.is_object() || !j.contains("edges") || !j["edges"].is_array()) {
        throw InvalidInput("graph JSON needs an \"edges\" array");
    }
    if (j.contains("nodes")) {
        for (const auto& n : j["nodes"]) {
            const auto name = n.is_string() ? n.get<std::string>() : n.dump();
            if (!u->find(node_from_name(name))) throw InvalidInput("graph JSON mentions unknown node " + name);
        }
    }
    MonotonicityGraph m(u);
    for (const auto& e : j["edges"]) {
        auto end = [&](const char* key) {
            const auto& v = e.at(key);
            return u->index_of(node_from_name(v.is_string() ? v.get<std::string>() : v.dump()));
        };
        const auto& w = e.at("weight");
        Weight weight;
        if (w.is_number_integer()) {
            weight = Weight(w.get<std::int64_t>());
        } else if (w.is_string() && w.get<std::string>() == "+inf") {
            weight = Weight::pos_inf();
        } else if (w.is_string() && w.get<std::string>() == "-inf") {
            continue;
        } else {
            throw InvalidInput("edge weight must be an integer, \"+inf\" or \"-inf\"");
        }
        m.tighten(end("from"), end("to"), weight);
    }
    return m;
}

json metrics_json(const Metrics& m) {
    return {{"graphs_created", m.graphs_created}, {"pool_size", m.pool_size}, {"max_norm", m.max_norm},
            {"degree_bound", m.degree_bound},     {"c", m.c},                 {"d", m.d},
            {"delta", m.delta}};
}

} // namespace

Gcs parse_gcs(std::string_view text) {
    Parser p(text);
    p.expect_word("gcs");
    p.expect("{");
    std::vector<std::string> vars;
    std::vector<std::int64_t> consts;
    std::optional<std::vector<std::string>> acts;
    std::set<std::string> seen;
    while (!p.accept("}")) {
        const Token key = p.peek();
        const auto k = p.ident("vars, consts or acts");
        if (!seen.insert(k).second) Parser::fail_at(key, "duplicate '" + k + "' entry");
        p.expect(":");
        if (k == "vars") {
            vars = ident_list(p);
        } else if (k == "consts") {
            if (!p.is(";")) {
                consts.push_back(p.integer());
                while (p.accept(",")) consts.push_back(p.integer());
            }
        } else if (k == "acts") {
            acts = ident_list(p);
        } else {
            Parser::fail_at(key, "unknown header entry '" + k + "'");
        }
        p.expect(";");
    }

    std::vector<TransitionRule> rules;
    std::vector<std::string> labels;
    while (!p.at_end()) {
        p.expect_word("rule");
        TransitionRule r;
        r.name = p.ident("a rule name");
        if (p.accept("[")) {
            r.label = p.ident("an action");
            p.expect("]");
        } else if (!acts) {
            r.label = "_";
        }
        p.expect(":");
        r.constraint = p.constraint();
        p.expect(";");
        if (!r.label.empty() && std::find(labels.begin(), labels.end(), r.label) == labels.end()) {
            labels.push_back(r.label);
        }
        rules.push_back(std::move(r));
    }
    Gcs g(std::move(vars), std::move(consts), acts ? *acts : labels, std::move(rules));
    require_valid(g);
    return g;
}

std::string serialize_constraint(const GapConstraint& c) {
    if (c.empty()) return "true";
    std::vector<std::string> parts;
    for (const auto& cl : c) parts.push_back(cl.str());
    return join(parts, " & ");
}

std::string serialize_gcs(const Gcs& g) {
    std::ostringstream os;
    std::vector<std::string> consts;
    for (const auto c : g.consts()) consts.push_back(std::to_string(c));
    os << "gcs {\n  vars: " << join(g.vars(), ", ") << ";\n  consts: " << join(consts, ", ")
       << ";\n  acts: " << join(g.acts(), ", ") << ";\n}\n";
    for (const auto& r : g.rules()) {
        os << "rule " << r.name;
        if (!r.label.empty()) os << " [" << r.label << "]";
        os << ": " << serialize_constraint(r.constraint) << ";\n";
    }
    return os.str();
}

GapConstraint parse_constraint(std::string_view text) {
    Parser p(text);
    if (p.at_end()) return {};
    auto c = p.constraint();
    p.expect_end();
    return c;
}

FormulaPtr parse_formula(std::string_view text) {
    Parser p(text);
    auto f = p.formula();
    p.expect_end();
    return f;
}

FormulaPtr parse_formula(std::string_view text, const Gcs& g) {
    auto f = parse_formula(text);
    check_formula_symbols(f, g);
    return f;
}

Valuation parse_valuation(std::string_view text, const Gcs& g) {
    Parser p(text);
    std::vector<std::optional<std::int64_t>> vals(g.vars().size());
    if (!p.at_end()) {
        do {
            const Token at = p.peek();
            const auto name = p.ident("a variable");
            const auto idx = g.state_universe()->find_var(name);
            if (!idx) Parser::fail_at(at, "undeclared variable '" + name + "'");
            if (vals[*idx]) Parser::fail_at(at, "variable '" + name + "' assigned twice");
            p.expect("=");
            vals[*idx] = p.integer();
        } while (p.accept(","));
    }
    p.expect_end();
    std::vector<std::int64_t> out;
    for (std::size_t i = 0; i < vals.size(); ++i) {
        if (!vals[i]) throw InvalidInput("valuation does not assign variable '" + g.vars()[i] + "'");
        out.push_back(*vals[i]);
    }
    return Valuation(std::move(out));
}

std::string serialize_valuation(const Valuation& v, const Gcs& g) {
    std::vector<std::string> parts;
    for (std::size_t i = 0; i < v.size(); ++i) parts.push_back(g.vars()[i] + "=" + std::to_string(v[i]));
    return join(parts, ", ");
}

FiniteLts parse_lts(std::string_view text) {
    FiniteLts l;
    std::size_t line_no = 0;
    std::size_t start = 0;
    auto name_ok = [](const std::string& s) {
        return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) {
            return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
        });
    };
    while (start <= text.size()) {
        const auto end = std::min(text.find('\n', start), text.size());
        std::string line(text.substr(start, end - start));
        start = end + 1;
        ++line_no;
        if (const auto h = line.find('#'); h != std::string::npos) line.resize(h);
        std::istringstream is(line);
        std::vector<std::string> words;
        for (std::string w; is >> w;) words.push_back(w);
        if (words.empty()) continue;
        const std::size_t col = line.find_first_not_of(" \t") + 1;
        if (words[0] == "acts:") {
            std::string rest;
            for (std::size_t i = 1; i < words.size(); ++i) rest += words[i];
            std::size_t pos = 0;
            while (pos < rest.size()) {
                const auto comma = std::min(rest.find(',', pos), rest.size());
                const auto a = rest.substr(pos, comma - pos);
                if (!name_ok(a)) throw ParseError(line_no, col, "malformed action name '" + a + "'");
                l.add_action(a);
                pos = comma + 1;
            }
            continue;
        }
        if (words.size() == 1) {
            if (!name_ok(words[0])) throw ParseError(line_no, col, "malformed state name '" + words[0] + "'");
            l.add_state(words[0]);
            continue;
        }
        const auto& arrow = words.size() == 3 ? words[1] : std::string();
        if (arrow.size() < 4 || arrow.front() != '-' || arrow.compare(arrow.size() - 2, 2, "->") != 0) {
            throw ParseError(line_no, col, "expected 'state -action-> state'");
        }
        const auto action = arrow.substr(1, arrow.size() - 3);
        if (!name_ok(words[0]) || !name_ok(words[2]) || !name_ok(action)) {
            throw ParseError(line_no, col, "malformed transition");
        }
        l.add_transition(words[0], action, words[2]);
    }
    return l;
}

std::string serialize_lts(const FiniteLts& l) {
    std::ostringstream os;
    os << "acts: " << join(l.acts, ", ") << "\n";
    for (const auto& s : l.states) os << s << "\n";
    for (const auto& t : l.transitions) {
        os << l.states[t.from] << " -" << l.acts[t.action] << "-> " << l.states[t.to] << "\n";
    }
    return os.str();
}

Qbf parse_qbf(std::string_view text) {
    Parser p(text);
    Qbf q;
    while (true) {
        Quantifier k;
        if (p.is_word("A") || p.is_word("forall")) {
            k = Quantifier::Forall;
        } else if (p.is_word("E") || p.is_word("exists")) {
            k = Quantifier::Exists;
        } else {
            break;
        }
        if (p.peek(1).kind != Token::Kind::Ident) break;
        p.next();
        q.prefix.emplace_back(k, p.ident("a variable"));
        p.expect(".");
    }
    q.matrix = p.bool_iff();
    p.expect_end();
    validate(q);
    return q;
}

std::string mg_to_json(const MonotonicityGraph& m) { return mg_json(m).dump(); }

MonotonicityGraph mg_from_json(std::string_view text, const UniversePtr& u) {
    try {
        return mg_from(json::parse(text), u);
    } catch (const json::exception& e) {
        throw InvalidInput(std::string("malformed graph JSON: ") + e.what());
    }
}

std::string set_to_json(const SymbolicSet& s) {
    json arr = json::array();
    for (const auto& m : s.members()) arr.push_back(mg_json(m));
    return arr.dump();
}

std::string set_to_text(const SymbolicSet& s) {
    if (s.empty()) return "false\n";
    std::string out;
    for (const auto& m : s.members()) {
        GapConstraint c;
        const auto& u = *m.universe();
        for (const auto& e : m.edges()) c.push_back({u.node(e.from), u.node(e.to), e.weight.raw()});
        out += serialize_constraint(c) + "\n";
    }
    return out;
}

SymbolicSet parse_set(std::string_view text, const Gcs& g) {
    const auto& u = g.state_universe();
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string_view::npos && (text[first] == '[' || text[first] == '{')) {
        try {
            const auto j = json::parse(text);
            const json& arr = j.is_object() && j.contains("members") ? j["members"] : j;
            std::vector<MonotonicityGraph> members;
            if (arr.is_array()) {
                for (const auto& m : arr) members.push_back(mg_from(m, u));
            } else {
                members.push_back(mg_from(arr, u));
            }
            return SymbolicSet(u, std::move(members));
        } catch (const json::exception& e) {
            throw InvalidInput(std::string("malformed set JSON: ") + e.what());
        }
    }
    std::vector<MonotonicityGraph> members;
    std::size_t start = 0;
    while (start <= text.size()) {
        const auto end = std::min(text.find('\n', start), text.size());
        const auto line = text.substr(start, end - start);
        start = end + 1;
        Parser p(line);
        if (p.at_end() || p.accept_word("false")) {
            p.expect_end();
            continue;
        }
        auto c = p.constraint();
        p.expect_end();
        for (const auto& cl : c) {
            for (const auto* n : {&cl.lhs, &cl.rhs}) {
                if (n->kind == Node::Kind::Primed) throw InvalidInput("primed variable in a set description");
            }
        }
        members.push_back(MonotonicityGraph::from_constraint(u, c));
    }
    return SymbolicSet(u, std::move(members));
}

std::string metrics_to_json(const Metrics& m) { return metrics_json(m).dump(); }

std::string report_to_json(const DiffReport& r) {
    json mism = json::array();
    for (const auto& m : r.mismatches) {
        mism.push_back({{"case", m.case_index},
                        {"gcs", serialize_gcs(m.gcs)},
                        {"formula", m.formula},
                        {"state", serialize_valuation(m.state, m.gcs)},
                        {"symbolic", m.symbolic},
                        {"explicit", m.explicit_verdict}});
    }
    return json{{"seed", r.seed},
                {"cases", r.cases},
                {"states_checked", r.states_checked},
                {"mismatches", mism},
                {"metrics", metrics_json(r.metrics)}}
        .dump();
}

} // namespace gcs
