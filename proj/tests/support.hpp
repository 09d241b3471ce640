// Copyright (c) gcsmc contributors.
// SPDX-License-Identifier: Apache-2.0
//
// Test-only oracles. Nothing here calls the engine's graph algebra: clause
// checks are plain arithmetic and reachability is explicit search, so these
// can judge the symbolic results independently.
#pragma once

#include <algorithm>
#include <cstdint>
#include <deque>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "gcs/formula.hpp"
#include "gcs/gcs.hpp"
#include "gcs/lts.hpp"
#include "gcs/mg.hpp"
#include "gcs/universe.hpp"

namespace gcs::testing {

using Rng = std::mt19937_64;

inline std::int64_t uniform(Rng& rng, std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

inline bool coin(Rng& rng, double p = 0.5) { return std::bernoulli_distribution(p)(rng); }

// Value of a node under pre/post assignments (by variable position).
inline std::int64_t node_value(const Node& n, const std::vector<std::string>& vars,
                               const std::vector<std::int64_t>& pre, const std::vector<std::int64_t>& post) {
    if (n.kind == Node::Kind::Const) return n.value;
    for (std::size_t i = 0; i < vars.size(); ++i) {
        if (vars[i] == n.name) return n.kind == Node::Kind::Var ? pre.at(i) : post.at(i);
    }
    throw std::logic_error("unknown variable " + n.name);
}

inline bool clauses_hold(const GapConstraint& c, const std::vector<std::string>& vars,
                         const std::vector<std::int64_t>& pre, const std::vector<std::int64_t>& post = {}) {
    for (const auto& cl : c) {
        const __int128 l = node_value(cl.lhs, vars, pre, post);
        const __int128 r = node_value(cl.rhs, vars, pre, post);
        if (l - r < cl.offset) return false;
    }
    return true;
}

// Every point of [lo, hi]^n in lexicographic order.
inline std::vector<std::vector<std::int64_t>> grid(std::size_t n, std::int64_t lo, std::int64_t hi) {
    std::vector<std::vector<std::int64_t>> out{{}};
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<std::vector<std::int64_t>> next;
        for (const auto& p : out) {
            for (std::int64_t v = lo; v <= hi; ++v) {
                auto q = p;
                q.push_back(v);
                next.push_back(std::move(q));
            }
        }
        out = std::move(next);
    }
    return out;
}

// Explicit step graph of g on a window, by clause arithmetic.
struct ExplicitSystem {
    std::vector<std::vector<std::int64_t>> states;
    std::map<std::vector<std::int64_t>, std::size_t> index;
    // succ[i] = (action, j)
    std::vector<std::vector<std::pair<std::string, std::size_t>>> succ;

    ExplicitSystem(const Gcs& g, std::int64_t lo, std::int64_t hi) {
        states = grid(g.vars().size(), lo, hi);
        for (std::size_t i = 0; i < states.size(); ++i) index[states[i]] = i;
        succ.resize(states.size());
        for (std::size_t i = 0; i < states.size(); ++i) {
            for (std::size_t j = 0; j < states.size(); ++j) {
                std::set<std::string> acts;
                for (const auto& r : g.rules()) {
                    if (clauses_hold(r.constraint, g.vars(), states[i], states[j])) acts.insert(r.label);
                }
                for (const auto& a : acts) succ[i].emplace_back(a, j);
            }
        }
    }

    // States with a path (allowed actions only) into `target`.
    [[nodiscard]] std::vector<bool> backward_reach(const std::vector<bool>& target,
                                                   const std::function<bool(const std::string&)>& allowed =
                                                       [](const std::string&) { return true; }) const {
        std::vector<bool> in = target;
        bool changed = true;
        while (changed) {
            changed = false;
            for (std::size_t i = 0; i < states.size(); ++i) {
                if (in[i]) continue;
                for (const auto& [a, j] : succ[i]) {
                    if (in[j] && allowed(a)) {
                        in[i] = true;
                        changed = true;
                        break;
                    }
                }
            }
        }
        return in;
    }
};

// Closure by naive relaxation to a fixpoint; any weight still rising after
// |V|+1 rounds sits on or behind a positive cycle and becomes +inf. Constant
// pairs are seeded with their arithmetic difference.
inline std::vector<std::vector<Weight>> relaxation_closure(const MonotonicityGraph& m) {
    const auto& u = *m.universe();
    const std::size_t n = u.size();
    std::vector<std::vector<Weight>> w(n, std::vector<Weight>(n, Weight::neg_inf()));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) w[i][j] = m.weight(i, j);
        w[i][i] = std::max(w[i][i], Weight(0));
    }
    for (std::size_t i = u.const_base(); i < n; ++i) {
        for (std::size_t j = u.const_base(); j < n; ++j) {
            if (i != j) w[i][j] = std::max(w[i][j], Weight(u.const_value(i) - u.const_value(j)));
        }
    }
    auto round = [&] {
        bool changed = false;
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t k = 0; k < n; ++k) {
                for (std::size_t j = 0; j < n; ++j) {
                    const auto s = w[i][k] + w[k][j];
                    if (w[i][j] < s) {
                        w[i][j] = s;
                        changed = true;
                    }
                }
            }
        }
        return changed;
    };
    for (std::size_t r = 0; r < n + 1; ++r) round();
    // A positive cycle shows up as a positive diagonal entry.
    bool positive_cycle = false;
    for (std::size_t i = 0; i < n; ++i) positive_cycle |= w[i][i] > Weight(0);
    if (positive_cycle) {
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                for (std::size_t k = 0; k < n; ++k) {
                    if (w[k][k] > Weight(0) && !w[i][k].is_neg_inf() && !w[k][j].is_neg_inf()) {
                        w[i][j] = Weight::pos_inf();
                    }
                }
            }
        }
    }
    return w;
}

// Textbook finite-state semantics of f on an explicit window system.
inline std::vector<bool> explicit_formula(const ExplicitSystem& sys, const Gcs& g, const FormulaPtr& f) {
    using K = Formula::Kind;
    const std::size_t n = sys.states.size();
    switch (f->kind) {
    case K::True: return std::vector<bool>(n, true);
    case K::False: return std::vector<bool>(n, false);
    case K::Atom: {
        std::vector<bool> out(n);
        for (std::size_t i = 0; i < n; ++i) out[i] = clauses_hold({f->atom}, g.vars(), sys.states[i]);
        return out;
    }
    case K::Not: {
        auto v = explicit_formula(sys, g, f->lhs);
        v.flip();
        return v;
    }
    case K::And:
    case K::Or: {
        auto a = explicit_formula(sys, g, f->lhs);
        const auto b = explicit_formula(sys, g, f->rhs);
        for (std::size_t i = 0; i < n; ++i) a[i] = f->kind == K::And ? (a[i] && b[i]) : (a[i] || b[i]);
        return a;
    }
    case K::Diamond:
    case K::Box: {
        auto inner = explicit_formula(sys, g, f->lhs);
        if (f->kind == K::Box) inner.flip();
        std::vector<bool> out(n, false);
        for (std::size_t i = 0; i < n; ++i) {
            for (const auto& [a, j] : sys.succ[i]) {
                if (a == f->action && inner[j] &&
                    (f->kind == K::Box || clauses_hold(f->guard, g.vars(), sys.states[i], sys.states[j]))) {
                    out[i] = true;
                }
            }
        }
        if (f->kind == K::Box) out.flip();
        return out;
    }
    case K::Ef:
    case K::Ag: {
        auto inner = explicit_formula(sys, g, f->lhs);
        if (f->kind == K::Ag) inner.flip();
        std::vector<bool> in = inner;
        bool changed = true;
        while (changed) {
            changed = false;
            for (std::size_t i = 0; i < n; ++i) {
                if (in[i]) continue;
                for (const auto& [a, j] : sys.succ[i]) {
                    if (!in[j]) continue;
                    if (f->kind == K::Ef && f->actions &&
                        std::find(f->actions->begin(), f->actions->end(), a) == f->actions->end()) {
                        continue;
                    }
                    if (f->kind == K::Ef && !clauses_hold(f->guard, g.vars(), sys.states[i], sys.states[j])) continue;
                    in[i] = true;
                    changed = true;
                    break;
                }
            }
        }
        if (f->kind == K::Ag) in.flip();
        return in;
    }
    default: throw std::logic_error("explicit_formula: EG/EU have no EF semantics here");
    }
}

// Random graph over u: a few edges with weights in [lo, hi].
inline MonotonicityGraph random_graph(Rng& rng, const UniversePtr& u, std::size_t max_edges, std::int64_t lo,
                                      std::int64_t hi) {
    MonotonicityGraph m(u);
    const auto edges = static_cast<std::size_t>(uniform(rng, 0, static_cast<std::int64_t>(max_edges)));
    const auto last = static_cast<std::int64_t>(u->size()) - 1;
    for (std::size_t e = 0; e < edges; ++e) {
        const auto i = static_cast<std::size_t>(uniform(rng, 0, last));
        const auto j = static_cast<std::size_t>(uniform(rng, 0, last));
        if (i == j || (u->is_const_node(i) && u->is_const_node(j))) continue;
        m.tighten(i, j, Weight(uniform(rng, lo, hi)));
    }
    return m;
}

inline UniversePtr random_state_universe(Rng& rng) {
    static const std::vector<std::string> names{"x", "y", "z"};
    const auto nv = static_cast<std::size_t>(uniform(rng, 1, 3));
    std::vector<std::int64_t> consts{0};
    if (coin(rng)) consts.push_back(uniform(rng, 1, 3));
    return Universe::state({names.begin(), names.begin() + static_cast<std::ptrdiff_t>(nv)}, consts);
}

inline std::vector<std::int64_t> random_point(Rng& rng, std::size_t n, std::int64_t lo, std::int64_t hi) {
    std::vector<std::int64_t> v(n);
    for (auto& x : v) x = uniform(rng, lo, hi);
    return v;
}

// Clause list of a graph's finite edges, for arithmetic evaluation.
inline GapConstraint as_clauses(const MonotonicityGraph& m) {
    GapConstraint c;
    const auto& u = *m.universe();
    for (std::size_t i = 0; i < u.size(); ++i) {
        for (std::size_t j = 0; j < u.size(); ++j) {
            const auto w = m.weight(i, j);
            if (w.is_finite() && i != j) c.push_back({u.node(i), u.node(j), w.raw()});
        }
    }
    return c;
}

inline bool graph_has_pos_inf(const MonotonicityGraph& m) {
    for (const auto r : m.raw()) {
        if (Weight(r).is_pos_inf()) return true;
    }
    return false;
}

// Arithmetic membership: +inf anywhere means unsatisfiable.
inline bool graph_holds(const MonotonicityGraph& m, const std::vector<std::int64_t>& pre,
                        const std::vector<std::int64_t>& post = {}) {
    if (graph_has_pos_inf(m)) return false;
    return clauses_hold(as_clauses(m), m.universe()->vars(), pre, post);
}

// Small finite LTSs for bisimulation tests (<= 5 states).
inline std::vector<FiniteLts> lts_library() {
    auto make = [](std::vector<std::string> acts, std::vector<std::string> states,
                   std::vector<std::tuple<std::string, std::string, std::string>> ts) {
        FiniteLts l;
        for (const auto& a : acts) l.add_action(a);
        for (const auto& s : states) l.add_state(s);
        for (const auto& [f, a, t] : ts) l.add_transition(f, a, t);
        return l;
    };
    std::vector<FiniteLts> lib;
    lib.push_back(make({"a"}, {"p"}, {{"p", "a", "p"}}));
    lib.push_back(make({"a"}, {"p", "q"}, {{"p", "a", "q"}}));
    lib.push_back(make({"a", "b"}, {"p", "q", "r"}, {{"p", "a", "q"}, {"p", "a", "r"}, {"q", "b", "q"}}));
    lib.push_back(make({"a", "b"}, {"p", "q", "r", "s"},
                       {{"p", "a", "q"}, {"q", "b", "r"}, {"q", "a", "s"}, {"p", "a", "r"}}));
    lib.push_back(make({"a", "tau"}, {"s", "s1", "t", "t1", "t2"},
                       {{"s", "a", "s1"}, {"t", "a", "t1"}, {"t1", "tau", "t2"}}));
    lib.push_back(make({"a", "tau"}, {"p", "q"}, {{"p", "tau", "q"}, {"q", "tau", "p"}, {"q", "a", "q"}}));
    lib.push_back(make({"tau"}, {"p"}, {{"p", "tau", "p"}}));
    lib.push_back(make({"a", "b"}, {"p", "q", "r", "s", "t"},
                       {{"p", "a", "q"}, {"q", "b", "p"}, {"r", "a", "s"}, {"s", "b", "t"}, {"t", "a", "s"}}));
    lib.push_back(make({"a", "b", "tau"}, {"p", "q", "r", "s"},
                       {{"p", "tau", "q"}, {"q", "a", "r"}, {"p", "b", "s"}, {"s", "tau", "s"}}));
    lib.push_back(make({"a"}, {"p", "q", "r"}, {{"p", "a", "q"}, {"q", "a", "r"}, {"r", "a", "p"}}));
    lib.push_back(make({"a", "b"}, {"p", "q", "r", "s"},
                       {{"p", "a", "q"}, {"p", "a", "r"}, {"q", "b", "s"}, {"r", "a", "s"}}));
    lib.push_back(make({"a", "tau"}, {"p", "q", "r", "s", "t"},
                       {{"p", "tau", "q"}, {"q", "tau", "r"}, {"r", "a", "s"}, {"t", "a", "s"}, {"s", "tau", "s"}}));
    return lib;
}

// Explicit strong bisimilarity on a finite LTS by the greatest fixpoint of
// the transfer condition on state pairs (no partitions involved).
inline std::vector<std::vector<bool>> naive_bisim(const FiniteLts& l) {
    const std::size_t n = l.states.size();
    std::vector<std::vector<bool>> r(n, std::vector<bool>(n, true));
    auto moves = [&](std::size_t s, std::size_t a) {
        std::vector<std::size_t> out;
        for (const auto& t : l.transitions) {
            if (t.from == s && t.action == a) out.push_back(t.to);
        }
        return out;
    };
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t s = 0; s < n; ++s) {
            for (std::size_t t = 0; t < n; ++t) {
                if (!r[s][t]) continue;
                bool ok = true;
                for (std::size_t a = 0; a < l.acts.size() && ok; ++a) {
                    const auto ms = moves(s, a);
                    const auto mt = moves(t, a);
                    for (const auto x : ms) {
                        bool matched = false;
                        for (const auto y : mt) matched |= r[x][y];
                        ok &= matched;
                    }
                    for (const auto y : mt) {
                        bool matched = false;
                        for (const auto x : ms) matched |= r[x][y];
                        ok &= matched;
                    }
                }
                if (!ok) {
                    r[s][t] = false;
                    changed = true;
                }
            }
        }
    }
    return r;
}

// Weak steps by explicit reachability: s =tau=> t is reflexive-transitive
// tau reach; s =a=> t is tau* a tau*.
inline FiniteLts naive_weak(const FiniteLts& l, const std::string& tau) {
    FiniteLts w;
    for (const auto& a : l.acts) w.add_action(a);
    w.add_action(tau);
    for (const auto& s : l.states) w.add_state(s);
    const auto ti = l.action_index(tau);
    const std::size_t n = l.states.size();
    std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
    for (std::size_t s = 0; s < n; ++s) {
        std::deque<std::size_t> q{s};
        reach[s][s] = true;
        while (!q.empty()) {
            const auto x = q.front();
            q.pop_front();
            for (const auto& t : l.transitions) {
                if (ti && t.action == *ti && t.from == x && !reach[s][t.to]) {
                    reach[s][t.to] = true;
                    q.push_back(t.to);
                }
            }
        }
    }
    for (std::size_t s = 0; s < n; ++s) {
        for (std::size_t t = 0; t < n; ++t) {
            if (reach[s][t]) w.add_transition(l.states[s], tau, l.states[t]);
        }
    }
    for (const auto& tr : l.transitions) {
        if (ti && tr.action == *ti) continue;
        for (std::size_t s = 0; s < n; ++s) {
            if (!reach[s][tr.from]) continue;
            for (std::size_t t = 0; t < n; ++t) {
                if (reach[tr.to][t]) w.add_transition(l.states[s], l.acts[tr.action], l.states[t]);
            }
        }
    }
    w.normalize();
    return w;
}

} // namespace gcs::testing
