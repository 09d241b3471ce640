// Copyright (c) gcsmc contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "gcs/formula.hpp"
#include "gcs/gcs.hpp"
#include "gcs/reductions.hpp"
#include "gcs/symbolic_set.hpp"

namespace gcs {

// Every valuation in [lo, hi]^|Var| with its in-window successors.
// States are numbered in lexicographic order (last variable fastest).
class WindowGraph {
  public:
    struct Edge {
        std::size_t action;  // index into Gcs::acts()
        std::size_t to;
    };

    WindowGraph(const Gcs& g, std::int64_t lo, std::int64_t hi, std::size_t cap = 1'000'000);

    [[nodiscard]] const Gcs& system() const { return g_; }
    [[nodiscard]] std::int64_t lo() const { return lo_; }
    [[nodiscard]] std::int64_t hi() const { return hi_; }
    [[nodiscard]] std::size_t size() const { return count_; }

    [[nodiscard]] Valuation state(std::size_t i) const;
    // Throws InvalidInput when v is outside the window.
    [[nodiscard]] std::size_t index(const Valuation& v) const;
    [[nodiscard]] bool in_window(const Valuation& v) const;

    [[nodiscard]] const std::vector<Edge>& out(std::size_t i) const { return edges_[i]; }

  private:
    const Gcs& g_;
    std::int64_t lo_;
    std::int64_t hi_;
    std::size_t count_ = 1;
    std::vector<std::vector<Edge>> edges_;
};

// Explicit-state denotation restricted to the window: bit i is set iff
// state(i) satisfies f within the window graph.
std::vector<bool> explicit_denote(const WindowGraph& w, const FormulaPtr& f);

bool explicit_check(const WindowGraph& w, const Valuation& v, const FormulaPtr& f);

struct WindowClosedCertificate {
    bool closed = false;
    std::string witness;  // first rule and variable lacking a bound when !closed
};

// Syntactic: each rule has, for every primed variable x', clauses
// x' - c >= k with c + k >= lo and d - x' >= k with d - k <= hi.
WindowClosedCertificate window_closed(const Gcs& g, std::int64_t lo, std::int64_t hi);

// Throws ResourceLimit beyond 20 variables.
bool qbf_eval(const Qbf& q);

struct DiffMismatch {
    std::size_t case_index = 0;
    Gcs gcs;
    std::string formula;
    Valuation state;
    bool symbolic = false;
    bool explicit_verdict = false;
};

struct DiffReport {
    std::uint64_t seed = 0;
    std::size_t cases = 0;
    std::size_t states_checked = 0;
    std::vector<DiffMismatch> mismatches;
    Metrics metrics;
};

struct DiffCase {
    Gcs gcs;
    FormulaPtr formula;
};

// Case i of a differential run; deterministic in (seed, i).
DiffCase differential_case(std::uint64_t seed, std::size_t i);

// Window [0, 4]: symbolic check against explicit_check on every window state.
DiffReport differential_run(std::uint64_t seed, std::size_t cases);

} // namespace gcs
