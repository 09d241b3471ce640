// Copyright (c) gcsmc contributors.
// SPDX-License-Identifier: Apache-2.0
#include "gcs/reductions.hpp"

#include <algorithm>
#include <set>

#include "gcs/error.hpp"

namespace gcs {

BoolExprPtr BoolExpr::constant(bool v) {
    auto e = std::make_shared<BoolExpr>();
    e->kind = Kind::Const;
    e->value = v;
    return e;
}

BoolExprPtr BoolExpr::variable(std::string name) {
    auto e = std::make_shared<BoolExpr>();
    e->kind = Kind::Var;
    e->var = std::move(name);
    return e;
}

BoolExprPtr BoolExpr::negate(BoolExprPtr a) {
    auto e = std::make_shared<BoolExpr>();
    e->kind = Kind::Not;
    e->lhs = std::move(a);
    return e;
}

BoolExprPtr BoolExpr::both(BoolExprPtr a, BoolExprPtr b) {
    auto e = std::make_shared<BoolExpr>();
    e->kind = Kind::And;
    e->lhs = std::move(a);
    e->rhs = std::move(b);
    return e;
}

BoolExprPtr BoolExpr::either(BoolExprPtr a, BoolExprPtr b) {
    auto e = std::make_shared<BoolExpr>();
    e->kind = Kind::Or;
    e->lhs = std::move(a);
    e->rhs = std::move(b);
    return e;
}

BoolExprPtr BoolExpr::iff(BoolExprPtr a, BoolExprPtr b) {
    return either(both(a, b), both(negate(a), negate(b)));
}

std::string to_string(const BoolExpr& e) {
    switch (e.kind) {
    case BoolExpr::Kind::Const: return e.value ? "true" : "false";
    case BoolExpr::Kind::Var: return e.var;
    case BoolExpr::Kind::Not: return "!" + to_string(*e.lhs);
    case BoolExpr::Kind::And: return "(" + to_string(*e.lhs) + " & " + to_string(*e.rhs) + ")";
    case BoolExpr::Kind::Or: return "(" + to_string(*e.lhs) + " | " + to_string(*e.rhs) + ")";
    }
    return {};
}

bool eval_bool(const BoolExpr& e, const std::vector<std::pair<std::string, bool>>& env) {
    switch (e.kind) {
    case BoolExpr::Kind::Const: return e.value;
    case BoolExpr::Kind::Var:
        for (const auto& [n, v] : env) {
            if (n == e.var) return v;
        }
        return false;
    case BoolExpr::Kind::Not: return !eval_bool(*e.lhs, env);
    case BoolExpr::Kind::And: return eval_bool(*e.lhs, env) && eval_bool(*e.rhs, env);
    case BoolExpr::Kind::Or: return eval_bool(*e.lhs, env) || eval_bool(*e.rhs, env);
    }
    return false;
}

namespace {

using Cube = std::set<Literal>;

std::set<Cube> dnf(const BoolExpr& e, bool positive) {
    switch (e.kind) {
    case BoolExpr::Kind::Const:
        if (e.value == positive) return {Cube{}};
        return {};
    case BoolExpr::Kind::Var: return {Cube{Literal{e.var, positive}}};
    case BoolExpr::Kind::Not: return dnf(*e.lhs, !positive);
    case BoolExpr::Kind::And:
    case BoolExpr::Kind::Or: {
        const bool conjunctive = (e.kind == BoolExpr::Kind::And) == positive;
        auto l = dnf(*e.lhs, positive);
        auto r = dnf(*e.rhs, positive);
        if (!conjunctive) {
            l.insert(r.begin(), r.end());
            return l;
        }
        std::set<Cube> out;
        for (const auto& a : l) {
            for (const auto& b : r) {
                Cube c = a;
                c.insert(b.begin(), b.end());
                out.insert(std::move(c));
            }
        }
        return out;
    }
    }
    return {};
}

bool contradictory(const Cube& c) {
    for (const auto& l : c) {
        if (l.positive && c.count(Literal{l.var, false})) return true;
    }
    return false;
}

void collect_vars(const BoolExpr& e, std::set<std::string>& out) {
    if (e.kind == BoolExpr::Kind::Var) out.insert(e.var);
    if (e.lhs) collect_vars(*e.lhs, out);
    if (e.rhs) collect_vars(*e.rhs, out);
}

GapClause geq(Node a, Node b, std::int64_t k) { return {std::move(a), std::move(b), k}; }

} // namespace

std::vector<std::vector<Literal>> to_dnf(const BoolExpr& e) {
    std::vector<std::vector<Literal>> out;
    for (const auto& c : dnf(e, true)) {
        if (!contradictory(c)) out.emplace_back(c.begin(), c.end());
    }
    return out;
}

std::string to_string(const Qbf& q) {
    std::string out;
    for (const auto& [k, v] : q.prefix) out += (k == Quantifier::Exists ? "E " : "A ") + v + ". ";
    return out + to_string(*q.matrix);
}

void validate(const Qbf& q) {
    std::set<std::string> bound;
    for (const auto& [k, v] : q.prefix) {
        if (!bound.insert(v).second) throw InvalidInput("QBF variable '" + v + "' quantified twice");
    }
    if (!q.matrix) throw InvalidInput("QBF without matrix");
    std::set<std::string> used;
    collect_vars(*q.matrix, used);
    for (const auto& v : used) {
        if (!bound.count(v)) throw InvalidInput("QBF variable '" + v + "' is free");
    }
}

QbfProgram qbf_to_boolean_program(const Qbf& q) {
    validate(q);
    const std::size_t k = q.prefix.size();
    auto eval = [](std::size_t i) { return "eval_" + std::to_string(i); };
    auto out = [](std::size_t i) { return "out_" + std::to_string(i); };
    auto var = [](const std::string& v) { return BoolExpr::variable(v); };

    BooleanProgram p;
    for (std::size_t i = 1; i <= k + 1; ++i) {
        p.states.push_back(eval(i));
        p.states.push_back(out(i));
    }
    for (const auto& [quant, x] : q.prefix) p.vars.push_back(x);
    std::vector<std::string> flags(k + 2);
    for (std::size_t i = 1; i <= k; ++i) {
        if (q.prefix[i - 1].first == Quantifier::Forall) {
            flags[i] = "y_" + std::to_string(i);
            p.vars.push_back(flags[i]);
        }
    }
    flags[k + 1] = "y_" + std::to_string(k + 1);
    p.vars.push_back(flags[k + 1]);
    for (const auto& [quant, x] : q.prefix) {
        if (std::find(flags.begin(), flags.end(), x) != flags.end()) {
            throw InvalidInput("QBF variable name '" + x + "' clashes with a generated flag");
        }
    }

    p.transitions.push_back({eval(k + 1), q.matrix, std::pair{flags[k + 1], true}, out(k + 1)});
    for (std::size_t i = 1; i <= k; ++i) {
        const auto& x = q.prefix[i - 1].second;
        if (q.prefix[i - 1].first == Quantifier::Exists) {
            p.transitions.push_back({eval(i), nullptr, std::pair{x, false}, eval(i + 1)});
            p.transitions.push_back({eval(i), nullptr, std::pair{x, true}, eval(i + 1)});
            p.transitions.push_back({out(i + 1), nullptr, std::nullopt, out(i)});
        } else {
            const auto& y = flags[i];
            const auto unset = BoolExpr::negate(var(y));
            p.transitions.push_back({eval(i), unset, std::pair{x, false}, eval(i + 1)});
            p.transitions.push_back({eval(i), var(y), std::pair{x, true}, eval(i + 1)});
            p.transitions.push_back({out(i + 1), unset, std::pair{y, true}, eval(i)});
            p.transitions.push_back({out(i + 1), var(y), std::pair{y, false}, out(i)});
        }
    }
    return {std::move(p), eval(1), out(1)};
}

GcsInstance boolean_program_to_gcs(const BooleanProgram& p, const std::string& start, const std::string& target) {
    auto index_of = [&](const std::string& s) -> std::int64_t {
        const auto it = std::find(p.states.begin(), p.states.end(), s);
        if (it == p.states.end()) throw InvalidInput("unknown control state '" + s + "'");
        return static_cast<std::int64_t>(it - p.states.begin()) + 1;
    };
    auto known = [&](const std::string& v) {
        if (std::find(p.vars.begin(), p.vars.end(), v) == p.vars.end()) {
            throw InvalidInput("unknown boolean variable '" + v + "'");
        }
    };

    const std::int64_t n = static_cast<std::int64_t>(p.states.size());
    std::vector<std::string> vars{"state"};
    for (const auto& v : p.vars) {
        if (v == "state") throw InvalidInput("boolean variable name 'state' is reserved");
        vars.push_back(v);
    }
    std::vector<std::int64_t> consts;
    for (std::int64_t c = 0; c <= n; ++c) consts.push_back(c);
    const Node zero = Node::constant(0);
    const Node one = Node::constant(1);

    std::vector<TransitionRule> rules;
    std::vector<std::string> diags;
    for (std::size_t ti = 0; ti < p.transitions.size(); ++ti) {
        const auto& t = p.transitions[ti];
        const Node from = Node::constant(index_of(t.from));
        const Node to = Node::constant(index_of(t.to));
        if (t.assign) known(t.assign->first);

        GapConstraint frame{geq(Node::var("state"), from, 0), geq(from, Node::var("state"), 0),
                            geq(Node::primed("state"), to, 0), geq(to, Node::primed("state"), 0)};
        for (const auto& v : p.vars) {
            const Node cur = Node::var(v);
            const Node next = Node::primed(v);
            frame.push_back(geq(next, zero, 0));
            frame.push_back(geq(one, next, 0));
            if (t.assign && t.assign->first == v) {
                const Node b = t.assign->second ? one : zero;
                frame.push_back(geq(next, b, 0));
                frame.push_back(geq(b, next, 0));
            } else {
                frame.push_back(geq(next, cur, 0));
                frame.push_back(geq(cur, next, 0));
            }
        }

        const auto guard = t.guard ? t.guard : BoolExpr::constant(true);
        const auto cubes = to_dnf(*guard);
        if (cubes.empty()) {
            diags.push_back("transition " + t.from + " -> " + t.to + ": guard " + to_string(*guard) +
                            " is unsatisfiable; dropped");
            continue;
        }
        for (std::size_t ci = 0; ci < cubes.size(); ++ci) {
            GapConstraint c = frame;
            for (const auto& lit : cubes[ci]) {
                known(lit.var);
                if (lit.positive) {
                    c.push_back(geq(Node::var(lit.var), one, 0));
                } else {
                    c.push_back(geq(zero, Node::var(lit.var), 0));
                }
            }
            rules.push_back({"t" + std::to_string(ti) + "_" + std::to_string(ci), std::move(c), "step"});
        }
    }

    std::vector<std::int64_t> init(vars.size(), 0);
    init[0] = index_of(start);
    const Node tgt = Node::constant(index_of(target));
    auto goal = fm::ef(fm::conj(fm::atom(geq(Node::var("state"), tgt, 0)), fm::atom(geq(tgt, Node::var("state"), 0))));
    Gcs g(std::move(vars), std::move(consts), {"step"}, std::move(rules));
    return {std::move(g), Valuation(std::move(init)), std::move(goal), std::move(diags)};
}

} // namespace gcs
