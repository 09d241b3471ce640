// Copyright (c) gcsmc contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "gcs/lts.hpp"
#include "gcs/mg.hpp"
#include "gcs/universe.hpp"

namespace gcs {

struct TransitionRule {
    std::string name;
    GapConstraint constraint;  // over Var ∪ Var' ∪ Const, offsets >= 0
    std::string label;

    friend bool operator==(const TransitionRule&, const TransitionRule&) = default;
};

// Total assignment of integers to the system's variables, in declaration order.
class Valuation {
  public:
    Valuation() = default;
    explicit Valuation(std::vector<std::int64_t> values) : values_(std::move(values)) {}

    [[nodiscard]] std::size_t size() const { return values_.size(); }
    [[nodiscard]] std::int64_t operator[](std::size_t i) const { return values_[i]; }
    std::int64_t& operator[](std::size_t i) { return values_[i]; }
    [[nodiscard]] std::span<const std::int64_t> values() const { return values_; }

    friend bool operator==(const Valuation&, const Valuation&) = default;
    friend auto operator<=>(const Valuation&, const Valuation&) = default;

  private:
    std::vector<std::int64_t> values_;
};

// nu ⊕ nu' over Var ∪ Var': unprimed values first, then primed.
std::vector<std::int64_t> combine(const Valuation& pre, const Valuation& post);

// Gap-order constraint system (Var, Const, Act, Δ, λ).
class Gcs {
  public:
    Gcs(std::vector<std::string> vars, std::vector<std::int64_t> consts, std::vector<std::string> acts,
        std::vector<TransitionRule> rules);

    [[nodiscard]] const std::vector<std::string>& vars() const { return state_->vars(); }
    [[nodiscard]] const std::vector<std::int64_t>& consts() const { return state_->consts(); }
    [[nodiscard]] const std::vector<std::string>& acts() const { return acts_; }
    [[nodiscard]] const std::vector<TransitionRule>& rules() const { return rules_; }

    [[nodiscard]] const UniversePtr& state_universe() const { return state_; }
    [[nodiscard]] const UniversePtr& transition_universe() const { return transition_; }

    [[nodiscard]] bool has_action(const std::string& a) const;

    // Closed transitional graph of rule i. Throws InvalidInput on unknown symbols.
    [[nodiscard]] MonotonicityGraph rule_graph(std::size_t i) const;

    friend bool operator==(const Gcs& a, const Gcs& b) {
        return a.vars() == b.vars() && a.consts() == b.consts() && a.acts_ == b.acts_ && a.rules_ == b.rules_;
    }

  private:
    UniversePtr state_;
    UniversePtr transition_;
    std::vector<std::string> acts_;
    std::vector<TransitionRule> rules_;
};

// One message per violated invariant; empty iff the system is well formed.
std::vector<std::string> validate(const Gcs& g);

// Throws InvalidInput carrying all diagnostics when validate() is non-empty.
void require_valid(const Gcs& g);

// Actions a with pre -a-> post.
std::set<std::string> step(const Gcs& g, const Valuation& pre, const Valuation& post);

bool satisfies(const Gcs& g, const TransitionRule& rule, const Valuation& pre, const Valuation& post);

// Successors with every component in [lo, hi], ordered by valuation, then
// action. Throws ResourceLimit when the window has more than `cap` points.
std::vector<std::pair<std::string, Valuation>> successors_in_window(const Gcs& g, const Valuation& v,
                                                                    std::int64_t lo, std::int64_t hi,
                                                                    std::size_t cap = 10'000'000);

// Single variable `state` ranging over 1..n; state k (1-based) stands for the
// k-th LTS state.
Gcs encode_finite_lts(const FiniteLts& l);

} // namespace gcs
