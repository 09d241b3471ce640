// Copyright (c) gcsmc contributors.
// SPDX-License-Identifier: Apache-2.0
#include "gcs/logic.hpp"

#include "gcs/error.hpp"

namespace gcs {

void require_ef(const FormulaPtr& f) {
    if (!is_ef(f)) {
        throw Undecidable(
            "EG and EU are not supported: model checking EG/EU formulae over gap-order constraint systems is "
            "undecidable; only the EF fragment can be decided");
    }
}

Evaluator::Evaluator(const Gcs& g, std::size_t pool_cap) : g_(g), pool_cap_(pool_cap) {}

// Hash-consing: a node's shape is its kind, payload and the ids of its
// children, so sharing in the input DAG is never expanded.
std::size_t Evaluator::intern(const FormulaPtr& f) {
    if (auto it = ids_.find(f.get()); it != ids_.end()) return it->second;
    std::string shape = std::to_string(static_cast<int>(f->kind));
    shape += '|';
    if (f->kind == Formula::Kind::Atom) shape += f->atom.str();
    shape += '|' + f->action + '|';
    for (const auto& c : f->guard) shape += c.str() + ';';
    shape += '|';
    if (f->actions) {
        shape += '[';
        for (const auto& a : *f->actions) shape += a + ',';
    }
    shape += '|';
    if (f->lhs) shape += std::to_string(intern(f->lhs));
    shape += '|';
    if (f->rhs) shape += std::to_string(intern(f->rhs));
    const auto [it, fresh] = shapes_.emplace(std::move(shape), shapes_.size());
    ids_.emplace(f.get(), it->second);
    pinned_.push_back(f);
    return it->second;
}

MonotonicityGraph Evaluator::atom_graph(const GapClause& c) const {
    for (const auto* n : {&c.lhs, &c.rhs}) {
        if (n->kind == Node::Kind::Primed) throw InvalidInput("atom " + c.str() + " mentions a primed variable");
    }
    return MonotonicityGraph::from_constraint(g_.state_universe(), {c});
}

SymbolicSet Evaluator::denote(const FormulaPtr& f) {
    require_ef(f);
    return value(f);
}

SymbolicSet Evaluator::value(const FormulaPtr& f) {
    const auto id = intern(f);
    if (auto it = values_.find(id); it != values_.end()) return it->second;
    auto v = eval(*f);
    values_.emplace(id, v);
    return v;
}

SymbolicSet Evaluator::eval(const Formula& f) {
    using K = Formula::Kind;
    const auto& u = g_.state_universe();
    switch (f.kind) {
    case K::True: return SymbolicSet::full(u);
    case K::False: return SymbolicSet(u);
    case K::Atom: return SymbolicSet(u, {atom_graph(f.atom)});
    case K::Not: return complement(value(f.lhs));
    case K::And: return intersect_sets(value(f.lhs), value(f.rhs));
    case K::Or: return union_sets(value(f.lhs), value(f.rhs));
    case K::Diamond: return pre_action(g_, f.action, value(f.lhs), f.guard);
    case K::Box: return complement(pre_action(g_, f.action, complement(value(f.lhs))));
    case K::Ef:
    case K::Ag: {
        PreStarOptions opts;
        opts.pool_cap = pool_cap_;
        Metrics m;
        opts.metrics = &m;
        SymbolicSet out(u);
        if (f.kind == K::Ef) {
            opts.guard = f.guard;
            opts.actions = f.actions;
            out = pre_star(g_, value(f.lhs), opts);
        } else {
            out = complement(pre_star(g_, complement(value(f.lhs)), opts));
        }
        metrics_.merge(m);
        return out;
    }
    case K::Eg:
    case K::Eu: break;
    }
    throw Undecidable("EG/EU reached the EF evaluator");
}

Denotation denote(const Gcs& g, const FormulaPtr& f) {
    Evaluator ev(g);
    auto set = ev.denote(f);
    return {std::move(set), ev.metrics(), nesting_depth(f)};
}

bool check(const Gcs& g, const Valuation& v, const FormulaPtr& f) {
    if (v.size() != g.vars().size()) {
        throw InvalidInput("valuation assigns " + std::to_string(v.size()) + " variables, system has " +
                           std::to_string(g.vars().size()));
    }
    return contains(denote(g, f).set, v);
}

} // namespace gcs
