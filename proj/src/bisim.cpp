// Copyright (c) gcsmc contributors.
// SPDX-License-Identifier: Apache-2.0
#include "gcs/bisim.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "gcs/error.hpp"

namespace gcs {

FiniteLts weak_closure(const FiniteLts& l, const std::string& tau) {
    l.check();
    FiniteLts out;
    out.states = l.states;
    out.acts = l.acts;
    const std::size_t t = out.add_action(tau);
    const std::size_t n = l.states.size();

    // reach[s][u]: u is τ*-reachable from s
    std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
    for (std::size_t s = 0; s < n; ++s) reach[s][s] = true;
    for (const auto& tr : l.transitions) {
        if (tr.action == t) reach[tr.from][tr.to] = true;
    }
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t i = 0; i < n; ++i) {
            if (!reach[i][k]) continue;
            for (std::size_t j = 0; j < n; ++j) {
                if (reach[k][j]) reach[i][j] = true;
            }
        }
    }

    for (std::size_t s = 0; s < n; ++s) {
        for (std::size_t u = 0; u < n; ++u) {
            if (reach[s][u]) out.transitions.push_back({s, t, u});
        }
    }
    for (const auto& tr : l.transitions) {
        if (tr.action == t) continue;
        for (std::size_t s = 0; s < n; ++s) {
            if (!reach[s][tr.from]) continue;
            for (std::size_t u = 0; u < n; ++u) {
                if (reach[tr.to][u]) out.transitions.push_back({s, tr.action, u});
            }
        }
    }
    out.normalize();
    return out;
}

std::vector<Partition> refinement_chain(const FiniteLts& l) {
    l.check();
    const std::size_t n = l.states.size();
    std::vector<Partition> chain;
    chain.push_back({std::vector<std::size_t>(n, 0), n ? std::size_t{1} : std::size_t{0}, 0});
    using Signature = std::pair<std::size_t, std::set<std::pair<std::size_t, std::size_t>>>;
    while (true) {
        const auto& prev = chain.back();
        std::vector<Signature> sig(n);
        for (std::size_t s = 0; s < n; ++s) sig[s].first = prev.class_of[s];
        for (const auto& tr : l.transitions) sig[tr.from].second.insert({tr.action, prev.class_of[tr.to]});
        std::map<Signature, std::size_t> ids;
        Partition next;
        next.level = prev.level + 1;
        next.class_of.resize(n);
        for (std::size_t s = 0; s < n; ++s) {
            next.class_of[s] = ids.emplace(sig[s], ids.size()).first->second;
        }
        next.classes = ids.size();
        const bool stable = next.classes == prev.classes;
        chain.push_back(std::move(next));
        if (stable) break;
    }
    return chain;
}

Partition refine(const FiniteLts& l) { return refinement_chain(l).back(); }

Partition bisimulation_classes(const FiniteLts& l, BisimMode mode, const std::string& tau) {
    return mode == BisimMode::Strong ? refine(l) : refine(weak_closure(l, tau));
}

HmFormulas::HmFormulas(const FiniteLts& l, BisimMode mode, const std::string& tau,
                       std::optional<std::vector<std::string>> alphabet)
    : mode_(mode), tau_(tau), alphabet_(alphabet ? std::move(*alphabet) : l.acts) {
    rel_ = mode == BisimMode::Strong ? l : weak_closure(l, tau);
    if (mode == BisimMode::Strong) rel_.normalize();
    for (const auto& a : rel_.acts) {
        const bool weak_tau = mode == BisimMode::Weak && a == tau && !l.action_index(tau);
        if (!weak_tau && std::find(alphabet_.begin(), alphabet_.end(), a) == alphabet_.end()) {
            throw InvalidInput("alphabet mismatch: LTS action '" + a + "' is not in the system's action set");
        }
    }
    tau_observable_ = std::find(alphabet_.begin(), alphabet_.end(), tau) != alphabet_.end();
    chain_ = refinement_chain(rel_);
    table_.push_back(std::vector<FormulaPtr>(chain_[0].classes, fm::t()));
}

const Partition& HmFormulas::level(std::size_t k) const { return chain_[std::min(k, chain_.size() - 1)]; }

FormulaPtr HmFormulas::weak_ef(FormulaPtr f) const {
    if (!tau_observable_) return f;
    return fm::ef(std::move(f), {}, std::vector<std::string>{tau_});
}

FormulaPtr HmFormulas::possibly(const std::string& a, FormulaPtr f) const {
    if (mode_ == BisimMode::Strong) return fm::diamond(a, std::move(f));
    if (a == tau_) return weak_ef(std::move(f));
    return weak_ef(fm::diamond(a, weak_ef(std::move(f))));
}

void HmFormulas::extend_to(std::size_t depth) {
    while (table_.size() <= depth) {
        const std::size_t k = table_.size() - 1;
        const auto& lower = level(k);
        const auto& upper = level(k + 1);
        std::vector<FormulaPtr> row(upper.classes);
        std::vector<bool> done(upper.classes, false);
        for (std::size_t s = 0; s < rel_.states.size(); ++s) {
            const auto c = upper.class_of[s];
            if (done[c]) continue;
            done[c] = true;
            std::vector<FormulaPtr> conjuncts;
            for (const auto& a : alphabet_) {
                if (mode_ == BisimMode::Weak && a == tau_ && !tau_observable_) continue;
                std::set<std::size_t> succ;
                if (const auto ai = rel_.action_index(a)) {
                    for (const auto& tr : rel_.transitions) {
                        if (tr.from == s && tr.action == *ai) succ.insert(lower.class_of[tr.to]);
                    }
                }
                std::vector<FormulaPtr> options;
                for (const auto d : succ) {
                    conjuncts.push_back(possibly(a, table_[k][d]));
                    options.push_back(table_[k][d]);
                }
                const auto outside = options.empty() ? fm::t() : fm::neg(fm::disj(options));
                conjuncts.push_back(fm::neg(possibly(a, outside)));
            }
            row[c] = fm::conj(conjuncts);
        }
        table_.push_back(std::move(row));
    }
}

FormulaPtr HmFormulas::at(std::size_t state, std::size_t depth) {
    if (state >= rel_.states.size()) throw InvalidInput("unknown LTS state index");
    extend_to(depth);
    return table_[depth][level(depth).class_of[state]];
}

FormulaPtr HmFormulas::characteristic(std::size_t state) {
    const std::size_t n = rel_.states.size();
    if (!invariant_) {
        extend_to(n);
        invariant_ = fm::ag(fm::disj(table_[n]));
    }
    return fm::conj(at(state, n), invariant_);
}

FormulaPtr hm_formula(const FiniteLts& l, std::size_t state, std::size_t depth, BisimMode mode,
                      const std::string& tau) {
    return HmFormulas(l, mode, tau).at(state, depth);
}

FormulaPtr characteristic_formula(const FiniteLts& l, std::size_t state, BisimMode mode, const std::string& tau,
                                  std::optional<std::vector<std::string>> alphabet) {
    return HmFormulas(l, mode, tau, std::move(alphabet)).characteristic(state);
}

EquivalenceChecker::EquivalenceChecker(const Gcs& g, const FiniteLts& l, BisimMode mode, const std::string& tau,
                                       std::size_t pool_cap)
    : g_(g), formulas_(l, mode, tau, g.acts()), eval_(g, pool_cap) {}

SymbolicSet EquivalenceChecker::equivalent_to(std::size_t state) { return eval_.denote(formulas_.characteristic(state)); }

bool EquivalenceChecker::check(const Valuation& v, std::size_t state) {
    if (v.size() != g_.vars().size()) throw InvalidInput("valuation does not match the system's variables");
    return contains(equivalent_to(state), v);
}

bool equiv_check(const Gcs& g, const Valuation& v, const FiniteLts& l, std::size_t state, BisimMode mode,
                 const std::string& tau) {
    return EquivalenceChecker(g, l, mode, tau).check(v, state);
}

} // namespace gcs
