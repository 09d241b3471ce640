// Copyright (c) gcsmc contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "gcs/formula.hpp"
#include "gcs/gcs.hpp"
#include "gcs/logic.hpp"
#include "gcs/lts.hpp"

namespace gcs {

enum class BisimMode { Strong, Weak };

// Saturated weak steps: s ⇒τ t for t τ-reachable from s (including s
// itself) and s ⇒a t for τ* a τ*. `tau` is added to the action table when
// absent.
FiniteLts weak_closure(const FiniteLts& l, const std::string& tau = "tau");

// Class ids are dense and numbered by first occurrence in state order.
struct Partition {
    std::vector<std::size_t> class_of;
    std::size_t classes = 0;
    std::size_t level = 0;

    [[nodiscard]] bool same(std::size_t s, std::size_t t) const { return class_of[s] == class_of[t]; }
};

// Levels 0, 1, ... of signature refinement on the given relation, ending at
// the first level that equals its predecessor. Level 0 is a single class.
std::vector<Partition> refinement_chain(const FiniteLts& l);

// Fixpoint of refinement_chain.
Partition refine(const FiniteLts& l);

// Bisimilarity classes of l; in weak mode refine(weak_closure(l, tau)).
Partition bisimulation_classes(const FiniteLts& l, BisimMode mode, const std::string& tau = "tau");

// Hennessy-Milner formulas of the level-k approximants. In strong mode the
// modalities are ⟨a⟩; in weak mode ⟨⟨a⟩⟩ = EF[τ]⟨a⟩EF[τ] and ⟨⟨τ⟩⟩ = EF[τ],
// read over weak_closure(l). Conjuncts range over `alphabet` (default: the
// actions of l); when τ is not in the alphabet, EF[τ] is the identity and
// the τ conjunct is dropped. Formulas of one class are shared between its
// states and across levels.
class HmFormulas {
  public:
    HmFormulas(const FiniteLts& l, BisimMode mode, const std::string& tau = "tau",
               std::optional<std::vector<std::string>> alphabet = std::nullopt);

    // φ_s^depth.
    FormulaPtr at(std::size_t state, std::size_t depth);

    // φ_s^n ∧ AG(⋁_t φ_t^n) with n = |states|.
    FormulaPtr characteristic(std::size_t state);

    [[nodiscard]] const FiniteLts& relation() const { return rel_; }
    [[nodiscard]] const Partition& level(std::size_t k) const;

  private:
    FormulaPtr weak_ef(FormulaPtr f) const;
    FormulaPtr possibly(const std::string& a, FormulaPtr f) const;
    void extend_to(std::size_t depth);

    BisimMode mode_;
    std::string tau_;
    std::vector<std::string> alphabet_;
    bool tau_observable_ = false;
    FiniteLts rel_;
    std::vector<Partition> chain_;
    std::vector<std::vector<FormulaPtr>> table_;  // table_[k][class at level k]
    FormulaPtr invariant_;
};

FormulaPtr hm_formula(const FiniteLts& l, std::size_t state, std::size_t depth, BisimMode mode,
                      const std::string& tau = "tau");

FormulaPtr characteristic_formula(const FiniteLts& l, std::size_t state, BisimMode mode,
                                  const std::string& tau = "tau",
                                  std::optional<std::vector<std::string>> alphabet = std::nullopt);

// Decides GCS states against the states of one finite LTS, sharing formula
// denotations across queries. Throws InvalidInput when l uses an action the
// system does not declare.
class EquivalenceChecker {
  public:
    EquivalenceChecker(const Gcs& g, const FiniteLts& l, BisimMode mode, const std::string& tau = "tau",
                       std::size_t pool_cap = PreStarOptions{}.pool_cap);

    // Valuations (weakly) bisimilar to `state`.
    SymbolicSet equivalent_to(std::size_t state);

    bool check(const Valuation& v, std::size_t state);

    [[nodiscard]] const Metrics& metrics() const { return eval_.metrics(); }

  private:
    const Gcs& g_;
    HmFormulas formulas_;
    Evaluator eval_;
};

bool equiv_check(const Gcs& g, const Valuation& v, const FiniteLts& l, std::size_t state, BisimMode mode,
                 const std::string& tau = "tau");

} // namespace gcs
