// Copyright (c) gcsmc contributors.
// SPDX-License-Identifier: Apache-2.0
#include "gcs/formula.hpp"

#include <algorithm>
#include <unordered_map>

namespace gcs {

namespace fm {

namespace {

FormulaPtr make(Formula::Kind k, FormulaPtr lhs = nullptr, FormulaPtr rhs = nullptr) {
    auto f = std::make_shared<Formula>();
    f->kind = k;
    f->lhs = std::move(lhs);
    f->rhs = std::move(rhs);
    return f;
}

template <class Op>
FormulaPtr fold(const std::vector<FormulaPtr>& xs, std::size_t lo, std::size_t hi, Op op) {
    if (hi - lo == 1) return xs[lo];
    const auto mid = lo + (hi - lo) / 2;
    return op(fold(xs, lo, mid, op), fold(xs, mid, hi, op));
}

} // namespace

FormulaPtr t() {
    static const FormulaPtr v = make(Formula::Kind::True);
    return v;
}

FormulaPtr f() {
    static const FormulaPtr v = make(Formula::Kind::False);
    return v;
}

FormulaPtr atom(GapClause c) {
    auto f = std::make_shared<Formula>();
    f->kind = Formula::Kind::Atom;
    f->atom = std::move(c);
    return f;
}

FormulaPtr neg(FormulaPtr a) { return make(Formula::Kind::Not, std::move(a)); }
FormulaPtr conj(FormulaPtr a, FormulaPtr b) { return make(Formula::Kind::And, std::move(a), std::move(b)); }
FormulaPtr disj(FormulaPtr a, FormulaPtr b) { return make(Formula::Kind::Or, std::move(a), std::move(b)); }

FormulaPtr conj(const std::vector<FormulaPtr>& xs) {
    if (xs.empty()) return t();
    return fold(xs, 0, xs.size(), [](FormulaPtr a, FormulaPtr b) { return conj(std::move(a), std::move(b)); });
}

FormulaPtr disj(const std::vector<FormulaPtr>& xs) {
    if (xs.empty()) return f();
    return fold(xs, 0, xs.size(), [](FormulaPtr a, FormulaPtr b) { return disj(std::move(a), std::move(b)); });
}

FormulaPtr diamond(std::string action, FormulaPtr a, GapConstraint guard) {
    auto f = std::make_shared<Formula>();
    f->kind = Formula::Kind::Diamond;
    f->action = std::move(action);
    f->guard = std::move(guard);
    f->lhs = std::move(a);
    return f;
}

FormulaPtr box(std::string action, FormulaPtr a) {
    auto f = std::make_shared<Formula>();
    f->kind = Formula::Kind::Box;
    f->action = std::move(action);
    f->lhs = std::move(a);
    return f;
}

FormulaPtr ef(FormulaPtr a, GapConstraint guard, std::optional<std::vector<std::string>> actions) {
    auto f = std::make_shared<Formula>();
    f->kind = Formula::Kind::Ef;
    f->guard = std::move(guard);
    f->actions = std::move(actions);
    f->lhs = std::move(a);
    return f;
}

FormulaPtr ag(FormulaPtr a) { return make(Formula::Kind::Ag, std::move(a)); }
FormulaPtr eg(FormulaPtr a) { return make(Formula::Kind::Eg, std::move(a)); }
FormulaPtr eu(FormulaPtr a, FormulaPtr b) { return make(Formula::Kind::Eu, std::move(a), std::move(b)); }

} // namespace fm

namespace {

std::string guard_str(const GapConstraint& g) {
    std::string out = "{";
    for (std::size_t i = 0; i < g.size(); ++i) {
        if (i) out += ", ";
        out += g[i].str();
    }
    return out + "}";
}

void print(const Formula& f, std::string& out) {
    using K = Formula::Kind;
    switch (f.kind) {
    case K::True: out += "true"; return;
    case K::False: out += "false"; return;
    case K::Atom: out += "(" + f.atom.str() + ")"; return;
    case K::Not: out += "!"; break;
    case K::Diamond:
        out += "<" + f.action + ">";
        if (!f.guard.empty()) out += guard_str(f.guard);
        out += " ";
        break;
    case K::Box: out += "[" + f.action + "] "; break;
    case K::Ef:
        out += "EF";
        if (f.actions) {
            out += "[";
            for (std::size_t i = 0; i < f.actions->size(); ++i) {
                if (i) out += ",";
                out += (*f.actions)[i];
            }
            out += "]";
        }
        if (!f.guard.empty()) out += guard_str(f.guard);
        out += " ";
        // a bare `EF [a] g` would read as an action list
        if (!f.actions && f.lhs->kind == K::Box) {
            out += "(";
            print(*f.lhs, out);
            out += ")";
            return;
        }
        break;
    case K::Ag: out += "AG "; break;
    case K::Eg: out += "EG "; break;
    case K::And:
    case K::Or:
    case K::Eu:
        out += f.kind == K::Eu ? "E(" : "(";
        print(*f.lhs, out);
        out += f.kind == K::And ? " & " : f.kind == K::Or ? " | " : " U ";
        print(*f.rhs, out);
        out += ")";
        return;
    }
    print(*f.lhs, out);
}

} // namespace

std::string to_string(const Formula& f) {
    std::string out;
    print(f, out);
    return out;
}

std::size_t nesting_depth(const FormulaPtr& f) {
    std::unordered_map<const Formula*, std::size_t> memo;
    auto go = [&](auto&& self, const Formula* n) -> std::size_t {
        if (auto it = memo.find(n); it != memo.end()) return it->second;
        std::size_t d = 0;
        if (n->lhs) d = self(self, n->lhs.get());
        if (n->rhs) d = std::max(d, self(self, n->rhs.get()));
        using K = Formula::Kind;
        switch (n->kind) {
        case K::Not:
        case K::Diamond:
        case K::Ef:
        case K::Eg:
        case K::Eu: d += 1; break;
        case K::Box:
        case K::Ag: d += 3; break;  // counted as their expansions ¬⟨a⟩¬ and ¬EF¬
        default: break;
        }
        memo.emplace(n, d);
        return d;
    };
    return go(go, f.get());
}

bool is_ef(const FormulaPtr& f) {
    std::unordered_map<const Formula*, bool> memo;
    auto go = [&](auto&& self, const Formula* n) -> bool {
        if (auto it = memo.find(n); it != memo.end()) return it->second;
        bool ok = n->kind != Formula::Kind::Eg && n->kind != Formula::Kind::Eu;
        if (ok && n->lhs) ok = self(self, n->lhs.get());
        if (ok && n->rhs) ok = self(self, n->rhs.get());
        memo.emplace(n, ok);
        return ok;
    };
    return go(go, f.get());
}

} // namespace gcs
