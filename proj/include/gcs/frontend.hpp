// Copyright (c) gcsmc contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "gcs/formula.hpp"
#include "gcs/gcs.hpp"
#include "gcs/lts.hpp"
#include "gcs/oracle.hpp"
#include "gcs/reductions.hpp"
#include "gcs/symbolic_set.hpp"

namespace gcs {

// Text formats. Parsers throw ParseError (line:column) on syntax errors and
// InvalidInput on semantic ones; `#` and `//` start comments everywhere.
//
// Clauses: `a - b >= k` and comparison chains `a OP b OP c ...` with OP one
// of >=, >, =, <=, <, expanded to >= clauses. Terms are identifiers,
// primed identifiers (x') and integers.

// Header `gcs { vars: ...; consts: ...; [acts: ...;] }` followed by rules
// `rule NAME [ACTION]: CLAUSES;`. `true` stands for the empty conjunction.
// Without an acts entry, the actions are the labels in order of first use;
// unlabelled rules get the action "_". Validation diagnostics are raised as
// one InvalidInput.
Gcs parse_gcs(std::string_view text);
std::string serialize_gcs(const Gcs& g);

// Conjunction of clauses separated by `&` or `,`; `true` is empty.
GapConstraint parse_constraint(std::string_view text);
std::string serialize_constraint(const GapConstraint& c);

// Grammar, loosest first: f | f, f & f, then the prefix operators
// ! f, <a> f, <a>{guard} f, [a] f, EF f, EF[a,b]{guard} f, AG f, EG f, and
// atoms true, false, clause chains, E(f U f), (f).
// With a system given, undeclared variables and actions are rejected.
FormulaPtr parse_formula(std::string_view text);
FormulaPtr parse_formula(std::string_view text, const Gcs& g);

// `x=3, y=0`; every variable exactly once.
Valuation parse_valuation(std::string_view text, const Gcs& g);
std::string serialize_valuation(const Valuation& v, const Gcs& g);

// Lines `s -a-> t`; a lone name declares a state; `acts: a, b` declares
// actions up front. The first state mentioned is state 0.
FiniteLts parse_lts(std::string_view text);
std::string serialize_lts(const FiniteLts& l);

// `A x. E y. matrix` (also `forall`/`exists`); matrix operators
// !, &, |, ->, <-> with the usual precedence.
Qbf parse_qbf(std::string_view text);

// {"nodes": [...], "edges": [{"from", "to", "weight"}]}; weights are
// integers or "+inf"; -inf edges are omitted. Uses the closure basis.
std::string mg_to_json(const MonotonicityGraph& m);
MonotonicityGraph mg_from_json(std::string_view text, const UniversePtr& u);

// JSON array of graphs.
std::string set_to_json(const SymbolicSet& s);

// One member per line as a clause conjunction; `false` for the empty set.
std::string set_to_text(const SymbolicSet& s);

// A JSON array of graphs, or clause lines (one member per line).
SymbolicSet parse_set(std::string_view text, const Gcs& g);

std::string metrics_to_json(const Metrics& m);
std::string report_to_json(const DiffReport& r);

} // namespace gcs
