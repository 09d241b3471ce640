// Copyright (c) gcsmc contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gcs/formula.hpp"
#include "gcs/gcs.hpp"

namespace gcs {

struct BoolExpr;
using BoolExprPtr = std::shared_ptr<const BoolExpr>;

// Quantifier-free propositional formula.
struct BoolExpr {
    enum class Kind { Const, Var, Not, And, Or };

    Kind kind = Kind::Const;
    bool value = true;  // Const
    std::string var;    // Var
    BoolExprPtr lhs;
    BoolExprPtr rhs;

    static BoolExprPtr constant(bool v);
    static BoolExprPtr variable(std::string name);
    static BoolExprPtr negate(BoolExprPtr a);
    static BoolExprPtr both(BoolExprPtr a, BoolExprPtr b);
    static BoolExprPtr either(BoolExprPtr a, BoolExprPtr b);
    static BoolExprPtr iff(BoolExprPtr a, BoolExprPtr b);
};

// Fully parenthesised, re-parseable by parse_qbf.
std::string to_string(const BoolExpr& e);

// Unknown variables are treated as false.
bool eval_bool(const BoolExpr& e, const std::vector<std::pair<std::string, bool>>& env);

struct Literal {
    std::string var;
    bool positive = true;

    friend bool operator==(const Literal&, const Literal&) = default;
    friend auto operator<=>(const Literal&, const Literal&) = default;
};

// Disjunctive normal form: each inner vector is a conjunction of literals.
// Contradictory conjunctions (x ∧ ¬x) are dropped; duplicates removed.
std::vector<std::vector<Literal>> to_dnf(const BoolExpr& e);

enum class Quantifier { Exists, Forall };

struct Qbf {
    std::vector<std::pair<Quantifier, std::string>> prefix;
    BoolExprPtr matrix;
};

std::string to_string(const Qbf& q);

// Throws InvalidInput on duplicate or free variables.
void validate(const Qbf& q);

struct BpTransition {
    std::string from;
    BoolExprPtr guard;  // null means true
    std::optional<std::pair<std::string, bool>> assign;
    std::string to;
};

struct BooleanProgram {
    std::vector<std::string> states;
    std::vector<std::string> vars;
    std::vector<BpTransition> transitions;
};

struct QbfProgram {
    BooleanProgram program;
    std::string start;
    std::string target;
};

// Top-down evaluator program: out_1 is reachable from eval_1 with all
// variables 0 iff q is true. Universal levels guard both branches on the
// flag y_i, so the x_i = 0 branch can be taken only before the flag is set.
QbfProgram qbf_to_boolean_program(const Qbf& q);

struct GcsInstance {
    Gcs gcs;
    Valuation initial;
    FormulaPtr target;                 // EF(state = [target])
    std::vector<std::string> diagnostics;  // dropped guard disjuncts
};

// Control state k (1-based, declaration order) is `state = k`; booleans are
// pinned to {0, 1}. Constants are 0..|states|, the window the instance is
// closed over. Every rule carries the action "step".
GcsInstance boolean_program_to_gcs(const BooleanProgram& p, const std::string& start, const std::string& target);

inline GcsInstance qbf_to_gcs(const Qbf& q) {
    const auto bp = qbf_to_boolean_program(q);
    return boolean_program_to_gcs(bp.program, bp.start, bp.target);
}

} // namespace gcs
