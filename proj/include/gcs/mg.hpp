// Copyright (c) gcsmc contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gcs/universe.hpp"
#include "gcs/weight.hpp"

namespace gcs {

// Weighted complete digraph over a Universe. An edge x -k-> y stands for the
// clause x - y >= k; absent edges carry -inf.
//
// Closed graphs hold, for every ordered pair, the supremum of path weights
// (the empty path counts, so a satisfiable closed graph has a zero diagonal).
// Before closing, every pair of distinct constants c, d is seeded with the
// arithmetic fact c -(c-d)-> d, which makes "no positive cycle" an exact
// satisfiability test.
class MonotonicityGraph {
  public:
    struct Edge {
        std::size_t from;
        std::size_t to;
        Weight weight;

        friend bool operator==(const Edge&, const Edge&) = default;
    };

    // Edgeless graph (every valuation satisfies it).
    explicit MonotonicityGraph(UniversePtr universe);

    // Graph of a conjunction of gap clauses; duplicate pairs keep the
    // maximal offset. Throws InvalidInput on unknown symbols.
    static MonotonicityGraph from_constraint(UniversePtr universe, const GapConstraint& constraint);

    [[nodiscard]] const UniversePtr& universe() const { return universe_; }
    [[nodiscard]] std::size_t size() const { return n_; }

    [[nodiscard]] Weight weight(std::size_t from, std::size_t to) const {
        return Weight(w_[from * n_ + to]);
    }
    [[nodiscard]] Weight weight(const Node& from, const Node& to) const;

    // Raises the weight of one edge to at least `w`. Clears the closed flag.
    void tighten(std::size_t from, std::size_t to, Weight w);

    [[nodiscard]] bool is_closed() const { return closed_; }

    // Only meaningful on closed graphs.
    [[nodiscard]] bool closed_satisfiable() const { return satisfiable_; }

    // Non-trivial edges: everything but -inf, non-positive self loops and
    // constant pairs whose clause is arithmetically valid. Sorted by (from, to).
    [[nodiscard]] std::vector<Edge> edges() const;

    [[nodiscard]] std::span<const Weight::rep> raw() const { return w_; }

    friend bool operator==(const MonotonicityGraph& a, const MonotonicityGraph& b);
    // Total order on graphs over one universe (lexicographic on weights).
    friend bool operator<(const MonotonicityGraph& a, const MonotonicityGraph& b) { return a.w_ < b.w_; }

    [[nodiscard]] std::string str() const;

  private:
    friend MonotonicityGraph closure(const MonotonicityGraph& m);
    friend MonotonicityGraph compose(const MonotonicityGraph& g, const MonotonicityGraph& m);
    friend MonotonicityGraph project(const MonotonicityGraph& m, const std::vector<std::string>& vars);
    friend MonotonicityGraph restrict(const MonotonicityGraph& m, const std::vector<std::string>& vars);
    friend MonotonicityGraph intersect(const MonotonicityGraph& m, const MonotonicityGraph& n);
    friend std::optional<MonotonicityGraph> with_edge(const MonotonicityGraph& m, std::size_t from, std::size_t to,
                                                      Weight w);

    Weight::rep& at(std::size_t from, std::size_t to) { return w_[from * n_ + to]; }
    enum class Collapsed { Satisfiable, Unsatisfiable, Unknown };

    // With exact_unsat false, an unsatisfiable graph may be left as all +inf
    // instead of marking only the pairs routed through positive cycles.
    void close_in_place(bool exact_unsat = true);
    Collapsed close_collapsed();

    UniversePtr universe_;
    std::size_t n_ = 0;
    std::vector<Weight::rep> w_;
    bool closed_ = false;
    bool satisfiable_ = true;
};

using MG = MonotonicityGraph;

// All-pairs max-plus closure with constant seeding. Nodes on a
// positive-weight cycle promote every weight routed through them to +inf.
MonotonicityGraph closure(const MonotonicityGraph& m);

bool is_satisfiable(const MonotonicityGraph& m);

// Magnitude of the most negative finite edge, ignoring constant pairs (their
// weights are arithmetic facts, not constraints).
std::size_t degree(const MonotonicityGraph& m);

// Maximal subgraph on `vars` (unprimed names) and the constants. The result
// lives in the state universe over `vars`, in the source's variable order.
MonotonicityGraph restrict(const MonotonicityGraph& m, const std::vector<std::string>& vars);

// restrict(closure(m), vars). Its solutions are exactly the restrictions of
// m's solutions.
MonotonicityGraph project(const MonotonicityGraph& m, const std::vector<std::string>& vars);

// Pointwise max of weights; both graphs must share a universe.
MonotonicityGraph intersect(const MonotonicityGraph& m, const MonotonicityGraph& n);

// Predecessors of m under the transitional graph g: rename m's variables to
// primed copies, intersect with g and project back onto the unprimed
// variables. Result is closed; an unsatisfiable result may carry +inf on
// every edge.
MonotonicityGraph compose(const MonotonicityGraph& g, const MonotonicityGraph& m);

// Closed satisfiable m conjoined with from -w-> to, re-closed in quadratic
// time. nullopt when the extra clause makes the graph unsatisfiable.
std::optional<MonotonicityGraph> with_edge(const MonotonicityGraph& m, std::size_t from, std::size_t to, Weight w);

// n ⊑ m: closure weights of n are pointwise below those of m, hence
// Sat(n) ⊇ Sat(m).
bool covers(const MonotonicityGraph& n, const MonotonicityGraph& m);

// `values` assigns the universe's variable nodes in index order (vars, then
// primed vars for transitional universes).
bool evaluate(const MonotonicityGraph& m, std::span<const std::int64_t> values);

// Closed form for equality and serialization. Throws InvalidInput when m is
// unsatisfiable.
MonotonicityGraph canonicalize(const MonotonicityGraph& m);

// Edge set of a closed satisfiable graph with redundant edges removed
// (classes of fixed-difference nodes are chained, implied edges dropped).
// The result denotes the same set as m.
std::vector<MonotonicityGraph::Edge> reduced_basis(const MonotonicityGraph& m);

} // namespace gcs
