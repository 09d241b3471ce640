// Copyright (c) gcsmc contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "gcs/formula.hpp"
#include "gcs/gcs.hpp"
#include "gcs/symbolic_set.hpp"

namespace gcs {

struct Denotation {
    SymbolicSet set;
    Metrics metrics;  // merged over every pre_star run of the evaluation
    std::size_t nesting_depth = 0;
};

// Bottom-up symbolic evaluator over one system. Structurally equal
// subformulas are evaluated once per evaluator, also across calls.
class Evaluator {
  public:
    explicit Evaluator(const Gcs& g, std::size_t pool_cap = PreStarOptions{}.pool_cap);

    // Throws Undecidable on Eg / Eu, InvalidInput on undeclared symbols,
    // non-positive EF guards and atoms mentioning primed variables.
    SymbolicSet denote(const FormulaPtr& f);

    [[nodiscard]] const Metrics& metrics() const { return metrics_; }

  private:
    std::size_t intern(const FormulaPtr& f);
    SymbolicSet value(const FormulaPtr& f);
    SymbolicSet eval(const Formula& f);
    MonotonicityGraph atom_graph(const GapClause& c) const;

    const Gcs& g_;
    std::size_t pool_cap_;
    Metrics metrics_;
    std::vector<FormulaPtr> pinned_;  // keeps interned pointers alive
    std::unordered_map<const Formula*, std::size_t> ids_;
    std::map<std::string, std::size_t> shapes_;
    std::unordered_map<std::size_t, SymbolicSet> values_;
};

Denotation denote(const Gcs& g, const FormulaPtr& f);

// ν ⊨ ψ.
bool check(const Gcs& g, const Valuation& v, const FormulaPtr& f);

// Throws Undecidable naming the construct when f contains Eg / Eu.
void require_ef(const FormulaPtr& f);

} // namespace gcs
