// Copyright (c) gcsmc contributors.
// SPDX-License-Identifier: Apache-2.0
#include "gcs/gcs.hpp"

#include <algorithm>
#include <map>

#include "gcs/error.hpp"

namespace gcs {

namespace {

// A clause operand resolved against Var ∪ Var' ∪ Const.
struct Operand {
    bool is_const = false;
    std::size_t index = 0;  // into the combined valuation
    std::int64_t value = 0;
};

struct CompiledClause {
    Operand lhs;
    Operand rhs;
    std::int64_t offset;
};

Operand resolve(const Gcs& g, const Node& n) {
    const auto& u = *g.state_universe();
    switch (n.kind) {
    case Node::Kind::Const: return {true, 0, n.value};
    case Node::Kind::Var:
        if (auto i = u.find_var(n.name)) return {false, *i, 0};
        break;
    case Node::Kind::Primed:
        if (auto i = u.find_var(n.name)) return {false, u.var_count() + *i, 0};
        break;
    }
    throw InvalidInput("unknown variable '" + n.name + "'");
}

std::vector<CompiledClause> compile(const Gcs& g, const TransitionRule& r) {
    std::vector<CompiledClause> out;
    out.reserve(r.constraint.size());
    for (const auto& c : r.constraint) out.push_back({resolve(g, c.lhs), resolve(g, c.rhs), c.offset});
    return out;
}

bool holds(const std::vector<CompiledClause>& clauses, std::span<const std::int64_t> combined) {
    for (const auto& c : clauses) {
        const __int128 l = c.lhs.is_const ? c.lhs.value : combined[c.lhs.index];
        const __int128 r = c.rhs.is_const ? c.rhs.value : combined[c.rhs.index];
        if (l - r < c.offset) return false;
    }
    return true;
}

} // namespace

std::vector<std::int64_t> combine(const Valuation& pre, const Valuation& post) {
    std::vector<std::int64_t> out(pre.values().begin(), pre.values().end());
    out.insert(out.end(), post.values().begin(), post.values().end());
    return out;
}

Gcs::Gcs(std::vector<std::string> vars, std::vector<std::int64_t> consts, std::vector<std::string> acts,
         std::vector<TransitionRule> rules)
    : state_(Universe::state(vars, consts)),
      transition_(Universe::transitional(std::move(vars), std::move(consts))),
      acts_(std::move(acts)),
      rules_(std::move(rules)) {}

bool Gcs::has_action(const std::string& a) const {
    return std::find(acts_.begin(), acts_.end(), a) != acts_.end();
}

MonotonicityGraph Gcs::rule_graph(std::size_t i) const {
    return closure(MonotonicityGraph::from_constraint(transition_, rules_.at(i).constraint));
}

std::vector<std::string> validate(const Gcs& g) {
    std::vector<std::string> diags;
    const auto& u = *g.transition_universe();
    std::map<std::string, int> rule_names;
    for (const auto& a : g.acts()) {
        if (std::count(g.acts().begin(), g.acts().end(), a) > 1) {
            diags.push_back("action '" + a + "' declared more than once");
            break;
        }
    }
    for (const auto& r : g.rules()) {
        if (++rule_names[r.name] == 2) diags.push_back("rule '" + r.name + "' defined more than once");
        if (r.label.empty()) {
            diags.push_back("rule '" + r.name + "' has no action label");
        } else if (!g.has_action(r.label)) {
            diags.push_back("rule '" + r.name + "' uses undeclared action '" + r.label + "'");
        }
        for (const auto& c : r.constraint) {
            for (const auto* n : {&c.lhs, &c.rhs}) {
                if (!u.find(*n)) {
                    diags.push_back("rule '" + r.name + "': unknown symbol " + n->str() + " in clause " + c.str());
                }
            }
            if (!c.positive()) {
                diags.push_back("rule '" + r.name + "': clause " + c.str() +
                                " has a negative offset; transitions must be positive gap constraints");
            }
        }
    }
    return diags;
}

void require_valid(const Gcs& g) {
    const auto diags = validate(g);
    if (diags.empty()) return;
    std::string msg = "invalid GCS:";
    for (const auto& d : diags) msg += "\n  " + d;
    throw InvalidInput(msg);
}

bool satisfies(const Gcs& g, const TransitionRule& rule, const Valuation& pre, const Valuation& post) {
    return holds(compile(g, rule), combine(pre, post));
}

std::set<std::string> step(const Gcs& g, const Valuation& pre, const Valuation& post) {
    std::set<std::string> out;
    const auto combined = combine(pre, post);
    for (const auto& r : g.rules()) {
        if (holds(compile(g, r), combined)) out.insert(r.label);
    }
    return out;
}

std::vector<std::pair<std::string, Valuation>> successors_in_window(const Gcs& g, const Valuation& v,
                                                                    std::int64_t lo, std::int64_t hi,
                                                                    std::size_t cap) {
    if (lo > hi) throw InvalidInput("successors_in_window: empty window");
    const std::size_t nv = g.vars().size();
    const auto width = static_cast<std::size_t>(hi - lo + 1);
    std::size_t points = 1;
    for (std::size_t i = 0; i < nv; ++i) {
        if (points > cap / width) throw ResourceLimit("successors_in_window: window exceeds enumeration cap");
        points *= width;
    }

    std::vector<std::vector<CompiledClause>> compiled;
    std::vector<std::string> labels;
    for (const auto& r : g.rules()) {
        compiled.push_back(compile(g, r));
        labels.push_back(r.label);
    }

    std::vector<std::pair<std::string, Valuation>> out;
    std::vector<std::int64_t> combined(2 * nv);
    std::copy(v.values().begin(), v.values().end(), combined.begin());
    for (std::size_t i = 0; i < nv; ++i) combined[nv + i] = lo;

    std::set<std::string> acts;
    for (std::size_t p = 0; p < points; ++p) {
        acts.clear();
        for (std::size_t r = 0; r < compiled.size(); ++r) {
            if (holds(compiled[r], combined)) acts.insert(labels[r]);
        }
        if (!acts.empty()) {
            Valuation succ(std::vector<std::int64_t>(combined.begin() + static_cast<std::ptrdiff_t>(nv), combined.end()));
            for (const auto& a : acts) out.emplace_back(a, succ);
        }
        // odometer, last variable fastest: lexicographic order
        for (std::size_t i = nv; i-- > 0;) {
            if (combined[nv + i] < hi) {
                ++combined[nv + i];
                break;
            }
            combined[nv + i] = lo;
        }
    }
    return out;
}

Gcs encode_finite_lts(const FiniteLts& l) {
    if (l.states.empty()) throw InvalidInput("encode_finite_lts: empty LTS");
    l.check();
    std::vector<std::int64_t> consts;
    for (std::size_t i = 1; i <= l.states.size(); ++i) consts.push_back(static_cast<std::int64_t>(i));
    std::vector<TransitionRule> rules;
    const Node s = Node::var("state");
    const Node sp = Node::primed("state");
    for (std::size_t i = 0; i < l.transitions.size(); ++i) {
        const auto& t = l.transitions[i];
        const auto p = Node::constant(static_cast<std::int64_t>(t.from + 1));
        const auto q = Node::constant(static_cast<std::int64_t>(t.to + 1));
        rules.push_back({"t" + std::to_string(i),
                         {{s, p, 0}, {p, s, 0}, {sp, q, 0}, {q, sp, 0}},
                         l.acts[t.action]});
    }
    return Gcs({"state"}, std::move(consts), l.acts, std::move(rules));
}

} // namespace gcs
