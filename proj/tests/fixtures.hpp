// Copyright (c) gcsmc contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>

#include "gcs/frontend.hpp"
#include "gcs/gcs.hpp"
#include "gcs/mg.hpp"

namespace gcs::testing {

// Lossy countdown: CX lowers x, CY lowers y and resets x arbitrarily.
inline const char* const kCountdownText = R"(gcs { vars: x, y; consts: 0; }
rule CX [a]: x > x' & x' >= 0 & y = y';
rule CY [b]: y > y' & y' >= 0 & x' >= 0;
)";

inline Gcs countdown() { return parse_gcs(kCountdownText); }

inline GapClause clause(Node a, Node b, std::int64_t k) { return {std::move(a), std::move(b), k}; }
inline Node var(const std::string& n) { return Node::var(n); }
inline Node pvar(const std::string& n) { return Node::primed(n); }
inline Node cst(std::int64_t v) { return Node::constant(v); }

inline MonotonicityGraph graph(const UniversePtr& u, const std::string& clauses) {
    return MonotonicityGraph::from_constraint(u, parse_constraint(clauses));
}

} // namespace gcs::testing
