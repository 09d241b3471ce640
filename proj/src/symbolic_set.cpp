// Copyright (c) gcsmc contributors.
// SPDX-License-Identifier: Apache-2.0
#include "gcs/symbolic_set.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>

#include "gcs/error.hpp"

namespace gcs {

namespace {

void require_same(const SymbolicSet& s, const SymbolicSet& t, const char* op) {
    if (!same_universe(s.universe(), t.universe())) {
        throw InvalidInput(std::string(op) + ": sets over different variables or constants");
    }
}

// The graphs eligible for one predecessor step: closed, satisfiable rule
// graphs with the guard folded in.
std::vector<MonotonicityGraph> step_graphs(const Gcs& g, const std::optional<std::vector<std::string>>& actions,
                                           const GapConstraint& guard) {
    const auto guard_graph = MonotonicityGraph::from_constraint(g.transition_universe(), guard);
    std::vector<MonotonicityGraph> out;
    for (std::size_t i = 0; i < g.rules().size(); ++i) {
        const auto& label = g.rules()[i].label;
        if (actions && std::find(actions->begin(), actions->end(), label) == actions->end()) continue;
        auto m = closure(intersect(g.rule_graph(i), guard_graph));
        if (m.closed_satisfiable()) out.push_back(std::move(m));
    }
    return out;
}

std::size_t norm(const MonotonicityGraph& m) {
    Weight::rep top = 0;
    for (const auto w : m.raw()) {
        if (w != Weight::kNegInf && w != Weight::kPosInf) top = std::max(top, w);
    }
    return degree(m) + 1 + static_cast<std::size_t>(top);
}

} // namespace

SymbolicSet::SymbolicSet(UniversePtr universe) : universe_(std::move(universe)) {
    if (universe_->is_transitional()) throw InvalidInput("symbolic sets live over Var ∪ Const");
}

SymbolicSet::SymbolicSet(UniversePtr universe, std::vector<MonotonicityGraph> graphs) : SymbolicSet(std::move(universe)) {
    std::vector<MonotonicityGraph> kept;
    for (auto& m : graphs) {
        if (!same_universe(m.universe(), universe_)) throw InvalidInput("symbolic set member over a foreign universe");
        auto c = m.is_closed() ? std::move(m) : closure(m);
        if (c.closed_satisfiable()) kept.push_back(std::move(c));
    }
    members_ = reduce_members(std::move(kept));
}

SymbolicSet SymbolicSet::full(UniversePtr universe) {
    MonotonicityGraph top(universe);
    return SymbolicSet(std::move(universe), {top});
}

SymbolicSet SymbolicSet::of(const MonotonicityGraph& m) { return SymbolicSet(m.universe(), {m}); }

std::vector<MonotonicityGraph> reduce_members(std::vector<MonotonicityGraph> graphs) {
    std::sort(graphs.begin(), graphs.end());
    graphs.erase(std::unique(graphs.begin(), graphs.end()), graphs.end());
    // Distinct closed graphs never cover each other both ways.
    std::vector<bool> drop(graphs.size(), false);
    for (std::size_t i = 0; i < graphs.size(); ++i) {
        for (std::size_t j = 0; j < graphs.size(); ++j) {
            if (i == j || drop[j]) continue;
            if (covers(graphs[j], graphs[i])) {
                drop[i] = true;
                break;
            }
        }
    }
    std::vector<MonotonicityGraph> out;
    out.reserve(graphs.size());
    for (std::size_t i = 0; i < graphs.size(); ++i) {
        if (!drop[i]) out.push_back(std::move(graphs[i]));
    }
    return out;
}

SymbolicSet union_sets(const SymbolicSet& s, const SymbolicSet& t) {
    require_same(s, t, "union");
    auto all = s.members();
    all.insert(all.end(), t.members().begin(), t.members().end());
    return SymbolicSet(s.universe(), std::move(all));
}

SymbolicSet intersect_sets(const SymbolicSet& s, const SymbolicSet& t) {
    require_same(s, t, "intersect");
    std::vector<MonotonicityGraph> products;
    for (const auto& m : s.members()) {
        for (const auto& n : t.members()) {
            auto p = closure(intersect(m, n));
            if (p.closed_satisfiable()) products.push_back(std::move(p));
        }
    }
    return SymbolicSet(s.universe(), std::move(products));
}

SymbolicSet complement(const SymbolicSet& s) {
    // ¬(M1 ∨ … ∨ Mk) = ∧_i ∨_{e ∈ basis(Mi)} ¬e, distributed one member at a time.
    std::vector<MonotonicityGraph> acc{closure(MonotonicityGraph(s.universe()))};
    for (const auto& m : s.members()) {
        std::vector<MonotonicityGraph::Edge> negated;
        for (const auto& e : reduced_basis(m)) {
            negated.push_back({e.to, e.from, Weight(1 - e.weight.raw())});
        }
        std::vector<MonotonicityGraph> next;
        for (const auto& r : acc) {
            const bool entailed = std::any_of(negated.begin(), negated.end(), [&](const auto& e) {
                return r.weight(e.from, e.to) >= e.weight;
            });
            if (entailed) {
                next.push_back(r);
                continue;
            }
            for (const auto& e : negated) {
                if (auto n = with_edge(r, e.from, e.to, e.weight)) next.push_back(std::move(*n));
            }
        }
        acc = reduce_members(std::move(next));
        if (acc.empty()) break;
    }
    return SymbolicSet(s.universe(), std::move(acc));
}

bool contains(const SymbolicSet& s, const Valuation& v) {
    return std::any_of(s.members().begin(), s.members().end(),
                       [&](const auto& m) { return evaluate(m, v.values()); });
}

bool subset_of(const SymbolicSet& s, const SymbolicSet& t) {
    require_same(s, t, "subset_of");
    std::vector<MonotonicityGraph> open;
    for (const auto& m : s.members()) {
        const bool covered =
            std::any_of(t.members().begin(), t.members().end(), [&](const auto& n) { return covers(n, m); });
        if (!covered) open.push_back(m);
    }
    if (open.empty()) return true;
    return intersect_sets(SymbolicSet(s.universe(), std::move(open)), complement(t)).empty();
}

std::size_t degree(const SymbolicSet& s) {
    std::size_t d = 0;
    for (const auto& m : s.members()) d = std::max(d, degree(m));
    return d;
}

SymbolicSet pre_constraint(const MonotonicityGraph& g, const SymbolicSet& s) {
    std::vector<MonotonicityGraph> out;
    for (const auto& m : s.members()) {
        auto p = compose(g, m);
        if (p.closed_satisfiable()) out.push_back(std::move(p));
    }
    return SymbolicSet(s.universe(), std::move(out));
}

SymbolicSet pre_action(const Gcs& g, const std::string& a, const SymbolicSet& s, const GapConstraint& guard) {
    if (!g.has_action(a)) throw InvalidInput("unknown action '" + a + "'");
    if (!same_universe(g.state_universe(), s.universe())) throw InvalidInput("pre_action: set over foreign universe");
    std::vector<MonotonicityGraph> out;
    for (const auto& gr : step_graphs(g, std::vector<std::string>{a}, guard)) {
        for (const auto& m : s.members()) {
            auto p = compose(gr, m);
            if (p.closed_satisfiable()) out.push_back(std::move(p));
        }
    }
    return SymbolicSet(s.universe(), std::move(out));
}

void Metrics::merge(const Metrics& o) {
    graphs_created += o.graphs_created;
    pool_size = std::max(pool_size, o.pool_size);
    max_norm = std::max(max_norm, o.max_norm);
    degree_bound = std::max(degree_bound, o.degree_bound);
    c = std::max(c, o.c);
    d = std::max(d, o.d);
    delta = std::max(delta, o.delta);
}

SymbolicSet pre_star(const Gcs& g, const SymbolicSet& s, const PreStarOptions& opts) {
    for (const auto& c : opts.guard) {
        if (!c.positive()) throw InvalidInput("EF guard clause " + c.str() + " is not positive");
    }
    if (opts.actions) {
        for (const auto& a : *opts.actions) {
            if (!g.has_action(a)) throw InvalidInput("unknown action '" + a + "'");
        }
    }
    if (!same_universe(g.state_universe(), s.universe())) throw InvalidInput("pre_star: set over foreign universe");

    const auto steps = step_graphs(g, opts.actions, opts.guard);

    Metrics m;
    m.degree_bound = degree(s);
    for (const auto k : g.consts()) m.c = std::max<std::size_t>(m.c, static_cast<std::size_t>(std::llabs(k)));
    m.d = s.universe()->size() * s.universe()->size();
    m.delta = steps.size();

    std::vector<MonotonicityGraph> pool;
    std::vector<bool> live;
    std::size_t live_count = 0;
    std::deque<std::size_t> work;
    auto admit = [&](MonotonicityGraph n) {
        for (std::size_t i = 0; i < pool.size(); ++i) {
            if (live[i] && covers(pool[i], n)) return;
        }
        for (std::size_t i = 0; i < pool.size(); ++i) {
            if (live[i] && covers(n, pool[i])) {
                live[i] = false;
                --live_count;
            }
        }
        m.max_norm = std::max(m.max_norm, norm(n));
        pool.push_back(std::move(n));
        live.push_back(true);
        ++live_count;
        work.push_back(pool.size() - 1);
        m.pool_size = std::max(m.pool_size, live_count);
        if (live_count > opts.pool_cap) {
            if (opts.metrics) *opts.metrics = m;
            throw ResourceLimit("pre_star: pool exceeded " + std::to_string(opts.pool_cap) + " graphs");
        }
    };

    for (const auto& n : s.members()) admit(n);
    while (!work.empty()) {
        const auto idx = work.front();
        work.pop_front();
        if (!live[idx]) continue;  // its predecessors are covered by those of its evictor
        for (const auto& gr : steps) {
            auto p = compose(gr, pool[idx]);
            ++m.graphs_created;
            if (p.closed_satisfiable()) admit(std::move(p));
        }
    }

    std::vector<MonotonicityGraph> result;
    for (std::size_t i = 0; i < pool.size(); ++i) {
        if (live[i]) result.push_back(pool[i]);
    }
    if (opts.metrics) *opts.metrics = m;
    return SymbolicSet(s.universe(), std::move(result));
}

} // namespace gcs
