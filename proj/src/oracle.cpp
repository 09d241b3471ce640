// Copyright (c) gcsmc contributors.
// SPDX-License-Identifier: Apache-2.0
#include "gcs/oracle.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <unordered_map>

#include "gcs/error.hpp"
#include "gcs/logic.hpp"

namespace gcs {

namespace {

// Clause arithmetic over ν ⊕ ν', kept apart from the graph code it checks.
std::int64_t node_value(const Gcs& g, const Node& n, const Valuation& pre, const Valuation* post) {
    if (n.kind == Node::Kind::Const) return n.value;
    const auto i = g.state_universe()->find_var(n.name);
    if (!i) throw InvalidInput("unknown variable '" + n.name + "'");
    if (n.kind == Node::Kind::Var) return pre[*i];
    if (!post) throw InvalidInput("primed variable in a state formula");
    return (*post)[*i];
}

bool holds(const Gcs& g, const GapConstraint& c, const Valuation& pre, const Valuation* post) {
    return std::all_of(c.begin(), c.end(), [&](const GapClause& cl) {
        const __int128 l = node_value(g, cl.lhs, pre, post);
        const __int128 r = node_value(g, cl.rhs, pre, post);
        return l - r >= cl.offset;
    });
}

std::vector<bool> negate(std::vector<bool> v) {
    v.flip();
    return v;
}

class ExplicitEvaluator {
  public:
    explicit ExplicitEvaluator(const WindowGraph& w) : w_(w) {}

    const std::vector<bool>& eval(const FormulaPtr& f) {
        if (auto it = memo_.find(f.get()); it != memo_.end()) return it->second;
        auto v = compute(*f);
        pinned_.push_back(f);
        return memo_.emplace(f.get(), std::move(v)).first->second;
    }

  private:
    using Step = std::function<bool(std::size_t from, const WindowGraph::Edge& e)>;

    // States with an eligible edge into `target`.
    std::vector<bool> pre(const std::vector<bool>& target, const Step& ok) const {
        std::vector<bool> out(w_.size(), false);
        for (std::size_t i = 0; i < w_.size(); ++i) {
            for (const auto& e : w_.out(i)) {
                if (target[e.to] && ok(i, e)) {
                    out[i] = true;
                    break;
                }
            }
        }
        return out;
    }

    std::vector<bool> reach(std::vector<bool> target, const Step& ok) const {
        bool changed = true;
        while (changed) {
            changed = false;
            const auto p = pre(target, ok);
            for (std::size_t i = 0; i < w_.size(); ++i) {
                if (p[i] && !target[i]) {
                    target[i] = true;
                    changed = true;
                }
            }
        }
        return target;
    }

    Step labelled(const std::string& a, const GapConstraint& guard) const {
        const auto& acts = w_.system().acts();
        const auto it = std::find(acts.begin(), acts.end(), a);
        if (it == acts.end()) throw InvalidInput("unknown action '" + a + "'");
        const auto idx = static_cast<std::size_t>(it - acts.begin());
        return [this, idx, guard](std::size_t from, const WindowGraph::Edge& e) {
            if (e.action != idx) return false;
            if (guard.empty()) return true;
            const auto pre = w_.state(from);
            const auto post = w_.state(e.to);
            return holds(w_.system(), guard, pre, &post);
        };
    }

    Step restricted(const std::optional<std::vector<std::string>>& actions, const GapConstraint& guard) const {
        std::vector<bool> allowed(w_.system().acts().size(), !actions);
        if (actions) {
            for (const auto& a : *actions) {
                const auto& acts = w_.system().acts();
                const auto it = std::find(acts.begin(), acts.end(), a);
                if (it == acts.end()) throw InvalidInput("unknown action '" + a + "'");
                allowed[static_cast<std::size_t>(it - acts.begin())] = true;
            }
        }
        return [this, allowed, guard](std::size_t from, const WindowGraph::Edge& e) {
            if (!allowed[e.action]) return false;
            if (guard.empty()) return true;
            const auto pre = w_.state(from);
            const auto post = w_.state(e.to);
            return holds(w_.system(), guard, pre, &post);
        };
    }

    std::vector<bool> compute(const Formula& f) {
        using K = Formula::Kind;
        const std::size_t n = w_.size();
        switch (f.kind) {
        case K::True: return std::vector<bool>(n, true);
        case K::False: return std::vector<bool>(n, false);
        case K::Atom: {
            std::vector<bool> out(n);
            for (std::size_t i = 0; i < n; ++i) out[i] = holds(w_.system(), {f.atom}, w_.state(i), nullptr);
            return out;
        }
        case K::Not: return negate(eval(f.lhs));
        case K::And:
        case K::Or: {
            auto out = eval(f.lhs);
            const auto& r = eval(f.rhs);
            for (std::size_t i = 0; i < n; ++i) out[i] = f.kind == K::And ? (out[i] && r[i]) : (out[i] || r[i]);
            return out;
        }
        case K::Diamond: return pre(eval(f.lhs), labelled(f.action, f.guard));
        case K::Box: return negate(pre(negate(eval(f.lhs)), labelled(f.action, {})));
        case K::Ef: return reach(eval(f.lhs), restricted(f.actions, f.guard));
        case K::Ag: return negate(reach(negate(eval(f.lhs)), restricted(std::nullopt, {})));
        case K::Eg:
        case K::Eu: break;
        }
        throw Undecidable("EG/EU are outside the EF fragment");
    }

    const WindowGraph& w_;
    std::vector<FormulaPtr> pinned_;
    std::unordered_map<const Formula*, std::vector<bool>> memo_;
};

} // namespace

WindowGraph::WindowGraph(const Gcs& g, std::int64_t lo, std::int64_t hi, std::size_t cap) : g_(g), lo_(lo), hi_(hi) {
    if (lo > hi) throw InvalidInput("empty window");
    const auto width = static_cast<std::size_t>(hi - lo + 1);
    for (std::size_t i = 0; i < g.vars().size(); ++i) {
        if (count_ > cap / width) throw ResourceLimit("window graph exceeds " + std::to_string(cap) + " states");
        count_ *= width;
    }
    edges_.resize(count_);
    for (std::size_t i = 0; i < count_; ++i) {
        for (const auto& [a, v] : successors_in_window(g, state(i), lo, hi)) {
            const auto ai = static_cast<std::size_t>(std::find(g.acts().begin(), g.acts().end(), a) - g.acts().begin());
            edges_[i].push_back({ai, index(v)});
        }
    }
}

Valuation WindowGraph::state(std::size_t i) const {
    const auto width = static_cast<std::size_t>(hi_ - lo_ + 1);
    std::vector<std::int64_t> v(g_.vars().size());
    for (std::size_t k = v.size(); k-- > 0;) {
        v[k] = lo_ + static_cast<std::int64_t>(i % width);
        i /= width;
    }
    return Valuation(std::move(v));
}

bool WindowGraph::in_window(const Valuation& v) const {
    if (v.size() != g_.vars().size()) return false;
    return std::all_of(v.values().begin(), v.values().end(), [&](auto x) { return x >= lo_ && x <= hi_; });
}

std::size_t WindowGraph::index(const Valuation& v) const {
    if (!in_window(v)) throw InvalidInput("valuation outside the window");
    const auto width = static_cast<std::size_t>(hi_ - lo_ + 1);
    std::size_t i = 0;
    for (const auto x : v.values()) i = i * width + static_cast<std::size_t>(x - lo_);
    return i;
}

std::vector<bool> explicit_denote(const WindowGraph& w, const FormulaPtr& f) {
    ExplicitEvaluator ev(w);
    return ev.eval(f);
}

bool explicit_check(const WindowGraph& w, const Valuation& v, const FormulaPtr& f) {
    const auto i = w.index(v);
    return explicit_denote(w, f)[i];
}

WindowClosedCertificate window_closed(const Gcs& g, std::int64_t lo, std::int64_t hi) {
    for (const auto& r : g.rules()) {
        for (const auto& x : g.vars()) {
            bool lower = false;
            bool upper = false;
            for (const auto& c : r.constraint) {
                if (c.lhs == Node::primed(x) && c.rhs.is_const() && c.rhs.value + c.offset >= lo) lower = true;
                if (c.rhs == Node::primed(x) && c.lhs.is_const() && c.lhs.value - c.offset <= hi) upper = true;
            }
            if (!lower || !upper) {
                return {false, "rule '" + r.name + "' does not bound " + x + "' " +
                                   (!lower ? "from below by " + std::to_string(lo)
                                           : "from above by " + std::to_string(hi))};
            }
        }
    }
    return {true, {}};
}

bool qbf_eval(const Qbf& q) {
    validate(q);
    if (q.prefix.size() > 20) throw ResourceLimit("qbf_eval: more than 20 variables");
    std::vector<std::pair<std::string, bool>> env;
    auto go = [&](auto&& self, std::size_t i) -> bool {
        if (i == q.prefix.size()) return eval_bool(*q.matrix, env);
        const bool exists = q.prefix[i].first == Quantifier::Exists;
        for (const bool b : {false, true}) {
            env.emplace_back(q.prefix[i].second, b);
            const bool r = self(self, i + 1);
            env.pop_back();
            if (r == exists) return exists;
        }
        return !exists;
    };
    return go(go, 0);
}

namespace {

constexpr std::int64_t kLo = 0;
constexpr std::int64_t kHi = 4;

class CaseGenerator {
  public:
    CaseGenerator(std::uint64_t seed, std::size_t i) {
        std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                          static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(i >> 32)};
        rng_.seed(seq);
    }

    DiffCase make() {
        static const std::vector<std::string> names{"x", "y", "z"};
        vars_.assign(names.begin(), names.begin() + static_cast<std::ptrdiff_t>(pick(1, 3)));
        std::vector<TransitionRule> rules;
        const auto nrules = pick(0, 4);
        for (std::int64_t r = 0; r < nrules; ++r) rules.push_back(rule(r));
        Gcs g(vars_, {0, 1, 2, 3, 4}, {"a", "b"}, std::move(rules));
        auto f = formula(3, 4);
        return {std::move(g), std::move(f)};
    }

  private:
    std::int64_t pick(std::int64_t lo, std::int64_t hi) { return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng_); }
    bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(rng_); }

    Node constant() { return Node::constant(pick(kLo, kHi)); }
    Node var() { return Node::var(vars_[static_cast<std::size_t>(pick(0, static_cast<std::int64_t>(vars_.size()) - 1))]); }
    Node primed() {
        return Node::primed(vars_[static_cast<std::size_t>(pick(0, static_cast<std::int64_t>(vars_.size()) - 1))]);
    }
    Node state_node() { return coin(0.7) ? var() : constant(); }
    Node any_node() {
        const auto k = pick(0, 2);
        return k == 0 ? var() : k == 1 ? primed() : constant();
    }

    TransitionRule rule(std::int64_t r) {
        GapConstraint c;
        for (const auto& x : vars_) {
            const auto lo = pick(kLo, kHi);
            const auto hi = pick(lo, kHi);
            c.push_back({Node::primed(x), Node::constant(lo), 0});
            c.push_back({Node::constant(hi), Node::primed(x), 0});
        }
        const auto extra = pick(0, 3);
        for (std::int64_t k = 0; k < extra; ++k) c.push_back({any_node(), any_node(), pick(0, 2)});
        return {"r" + std::to_string(r), std::move(c), coin() ? "a" : "b"};
    }

    GapClause state_clause() { return {state_node(), state_node(), pick(-3, 3)}; }

    FormulaPtr formula(std::size_t budget, std::size_t size) {
        if (budget == 0 || size == 0 || coin(0.25)) {
            const auto k = pick(0, 9);
            if (k == 0) return fm::t();
            if (k == 1) return fm::f();
            return fm::atom(state_clause());
        }
        const std::string act = coin() ? "a" : "b";
        switch (pick(0, 7)) {
        case 0: return fm::neg(formula(budget - 1, size - 1));
        case 1: return fm::conj(formula(budget, size / 2), formula(budget, size / 2));
        case 2: return fm::disj(formula(budget, size / 2), formula(budget, size / 2));
        case 3: {
            GapConstraint guard;
            if (coin(0.3)) guard.push_back({any_node(), any_node(), pick(-1, 2)});
            return fm::diamond(act, formula(budget - 1, size - 1), guard);
        }
        case 4:
            if (budget >= 3) return fm::box(act, formula(budget - 3, size - 1));
            return fm::diamond(act, formula(budget - 1, size - 1));
        case 5:
        case 6: {
            GapConstraint guard;
            if (coin(0.25)) guard.push_back({any_node(), any_node(), pick(0, 2)});
            std::optional<std::vector<std::string>> acts;
            if (coin(0.3)) acts = std::vector<std::string>{act};
            return fm::ef(formula(budget - 1, size - 1), guard, acts);
        }
        default:
            if (budget >= 3) return fm::ag(formula(budget - 3, size - 1));
            return fm::ef(formula(budget - 1, size - 1));
        }
    }

    std::mt19937_64 rng_;
    std::vector<std::string> vars_;
};

} // namespace

DiffCase differential_case(std::uint64_t seed, std::size_t i) { return CaseGenerator(seed, i).make(); }

DiffReport differential_run(std::uint64_t seed, std::size_t cases) {
    DiffReport report;
    report.seed = seed;
    report.cases = cases;
    for (std::size_t i = 0; i < cases; ++i) {
        const auto c = differential_case(seed, i);
        if (!window_closed(c.gcs, kLo, kHi).closed) throw Error("differential generator produced an open system");
        Evaluator ev(c.gcs);
        const auto sym = ev.denote(c.formula);
        report.metrics.merge(ev.metrics());
        const WindowGraph w(c.gcs, kLo, kHi);
        const auto expl = explicit_denote(w, c.formula);
        for (std::size_t s = 0; s < w.size(); ++s) {
            const auto v = w.state(s);
            const bool a = contains(sym, v);
            ++report.states_checked;
            if (a != expl[s]) report.mismatches.push_back({i, c.gcs, to_string(c.formula), v, a, expl[s]});
        }
    }
    return report;
}

} // namespace gcs
