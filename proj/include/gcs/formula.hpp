// Copyright (c) gcsmc contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "gcs/universe.hpp"

namespace gcs {

struct Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

// EF-fragment syntax tree. Subtrees may be shared; evaluators treat the tree
// as a DAG. Eg and Eu exist only so that they can be parsed and rejected.
struct Formula {
    enum class Kind { True, False, Atom, Not, And, Or, Diamond, Box, Ef, Ag, Eg, Eu };

    Kind kind = Kind::True;
    GapClause atom;                                   // Atom
    std::string action;                               // Diamond, Box
    GapConstraint guard;                              // Diamond, Ef (transitional)
    std::optional<std::vector<std::string>> actions;  // Ef; nullopt = all
    FormulaPtr lhs;                                   // operand of unary nodes
    FormulaPtr rhs;
};

namespace fm {

FormulaPtr t();
FormulaPtr f();
FormulaPtr atom(GapClause c);
FormulaPtr neg(FormulaPtr a);
FormulaPtr conj(FormulaPtr a, FormulaPtr b);
FormulaPtr disj(FormulaPtr a, FormulaPtr b);
// Balanced folds; the empty conjunction is true, the empty disjunction false.
FormulaPtr conj(const std::vector<FormulaPtr>& xs);
FormulaPtr disj(const std::vector<FormulaPtr>& xs);
FormulaPtr diamond(std::string action, FormulaPtr a, GapConstraint guard = {});
FormulaPtr box(std::string action, FormulaPtr a);
FormulaPtr ef(FormulaPtr a, GapConstraint guard = {}, std::optional<std::vector<std::string>> actions = std::nullopt);
FormulaPtr ag(FormulaPtr a);
FormulaPtr eg(FormulaPtr a);
FormulaPtr eu(FormulaPtr a, FormulaPtr b);

} // namespace fm

// Concrete syntax accepted by parse_formula. Binary nodes are parenthesised,
// so the output re-parses to the same tree. Size is linear in the tree, not
// the DAG.
std::string to_string(const Formula& f);
inline std::string to_string(const FormulaPtr& f) { return to_string(*f); }

// Deepest chain of Not / Diamond / Ef / Eg / Eu nodes, with Box and Ag
// counted as their expansions (three levels each).
std::size_t nesting_depth(const FormulaPtr& f);

// True iff no Eg / Eu node occurs.
bool is_ef(const FormulaPtr& f);

} // namespace gcs
