// Copyright (c) gcsmc contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "gcs/gcs.hpp"
#include "gcs/mg.hpp"

namespace gcs {

// Finite union of closed, satisfiable graphs over a state universe. Members
// form an antichain under ⊑ and are kept in ascending weight order, so equal
// member lists mean equal representations.
class SymbolicSet {
  public:
    // The empty set.
    explicit SymbolicSet(UniversePtr universe);

    // Closes each graph, drops unsatisfiable ones and reduces.
    SymbolicSet(UniversePtr universe, std::vector<MonotonicityGraph> graphs);

    static SymbolicSet full(UniversePtr universe);
    static SymbolicSet of(const MonotonicityGraph& m);

    [[nodiscard]] const UniversePtr& universe() const { return universe_; }
    [[nodiscard]] const std::vector<MonotonicityGraph>& members() const { return members_; }
    [[nodiscard]] bool empty() const { return members_.empty(); }
    [[nodiscard]] std::size_t size() const { return members_.size(); }

    friend bool operator==(const SymbolicSet& a, const SymbolicSet& b) {
        return same_universe(a.universe_, b.universe_) && a.members_ == b.members_;
    }

  private:
    UniversePtr universe_;
    std::vector<MonotonicityGraph> members_;
};

// Drops members whose denotation is contained in another member's, then
// sorts. Members must be closed and satisfiable.
std::vector<MonotonicityGraph> reduce_members(std::vector<MonotonicityGraph> graphs);

SymbolicSet union_sets(const SymbolicSet& s, const SymbolicSet& t);
SymbolicSet intersect_sets(const SymbolicSet& s, const SymbolicSet& t);
SymbolicSet complement(const SymbolicSet& s);

bool contains(const SymbolicSet& s, const Valuation& v);
bool subset_of(const SymbolicSet& s, const SymbolicSet& t);

// Maximal member degree; 0 for the empty set.
std::size_t degree(const SymbolicSet& s);

// Predecessors of s under one transitional graph.
SymbolicSet pre_constraint(const MonotonicityGraph& g, const SymbolicSet& s);

// Predecessors of s under the a-labelled rules, each conjoined with `guard`
// (any gap constraint over Var ∪ Var' ∪ Const). Throws InvalidInput on an
// unknown action.
SymbolicSet pre_action(const Gcs& g, const std::string& a, const SymbolicSet& s, const GapConstraint& guard = {});

// Counters of one pre_star run.
struct Metrics {
    std::size_t graphs_created = 0;  // compositions performed
    std::size_t pool_size = 0;       // largest live pool
    std::size_t max_norm = 0;        // over pool members: degree + 1 + largest finite weight
    std::size_t degree_bound = 0;    // degree of the target set
    std::size_t c = 0;               // largest absolute constant
    std::size_t d = 0;               // |Var ∪ Const|^2
    std::size_t delta = 0;           // eligible transitional graphs

    // Sums graphs_created, maxes the rest.
    void merge(const Metrics& o);
};

struct PreStarOptions {
    // Conjoined to every step; all offsets must be >= 0.
    GapConstraint guard;
    // Eligible labels; nullopt means every action.
    std::optional<std::vector<std::string>> actions;
    // Live pool members allowed before ResourceLimit is thrown.
    std::size_t pool_cap = 200'000;
    Metrics* metrics = nullptr;
};

// Backward reachability fixpoint: valuations with a path into s using only
// eligible steps. Graphs covering a live pool member are discarded; members
// covering a new graph are evicted.
SymbolicSet pre_star(const Gcs& g, const SymbolicSet& s, const PreStarOptions& opts = {});

} // namespace gcs
