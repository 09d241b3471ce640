// Copyright (c) gcsmc contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace gcs {

// A node of a monotonicity graph: a variable, its primed (next-state) copy,
// or an integer constant. Constants evaluate to themselves.
struct Node {
    enum class Kind : std::uint8_t { Var, Primed, Const };

    Kind kind = Kind::Var;
    std::string name;        // Var / Primed
    std::int64_t value = 0;  // Const

    static Node var(std::string n) { return {Kind::Var, std::move(n), 0}; }
    static Node primed(std::string n) { return {Kind::Primed, std::move(n), 0}; }
    static Node constant(std::int64_t v) { return {Kind::Const, {}, v}; }

    [[nodiscard]] bool is_const() const { return kind == Kind::Const; }
    [[nodiscard]] std::string str() const;

    friend bool operator==(const Node&, const Node&) = default;
    friend auto operator<=>(const Node&, const Node&) = default;
};

// lhs - rhs >= offset
struct GapClause {
    Node lhs;
    Node rhs;
    std::int64_t offset = 0;

    [[nodiscard]] bool positive() const { return offset >= 0; }
    [[nodiscard]] std::string str() const;

    friend bool operator==(const GapClause&, const GapClause&) = default;
    friend auto operator<=>(const GapClause&, const GapClause&) = default;
};

// Conjunction of gap clauses.
using GapConstraint = std::vector<GapClause>;

// The node set of a family of monotonicity graphs, with a fixed index layout:
// variables first, then primed copies (transitional universes only), then
// constants in ascending order.
class Universe {
  public:
    static std::shared_ptr<const Universe> state(std::vector<std::string> vars,
                                                 std::vector<std::int64_t> consts);
    static std::shared_ptr<const Universe> transitional(std::vector<std::string> vars,
                                                        std::vector<std::int64_t> consts);

    [[nodiscard]] std::size_t size() const { return size_; }
    [[nodiscard]] std::size_t var_count() const { return vars_.size(); }
    [[nodiscard]] std::size_t const_count() const { return consts_.size(); }
    [[nodiscard]] bool is_transitional() const { return transitional_; }

    [[nodiscard]] const std::vector<std::string>& vars() const { return vars_; }
    [[nodiscard]] const std::vector<std::int64_t>& consts() const { return consts_; }

    [[nodiscard]] std::size_t var_node(std::size_t i) const { return i; }
    [[nodiscard]] std::size_t primed_node(std::size_t i) const { return vars_.size() + i; }
    [[nodiscard]] std::size_t const_node(std::size_t j) const { return const_base_ + j; }
    [[nodiscard]] std::size_t const_base() const { return const_base_; }
    [[nodiscard]] bool is_const_node(std::size_t idx) const { return idx >= const_base_; }
    [[nodiscard]] std::int64_t const_value(std::size_t idx) const { return consts_[idx - const_base_]; }

    [[nodiscard]] Node node(std::size_t idx) const;
    [[nodiscard]] std::optional<std::size_t> find(const Node& n) const;
    [[nodiscard]] std::optional<std::size_t> find_var(const std::string& name) const;

    // Index requirement; throws InvalidInput naming the unknown symbol.
    [[nodiscard]] std::size_t index_of(const Node& n) const;

    // The state-space universe over the same variables and constants.
    [[nodiscard]] std::shared_ptr<const Universe> state_part() const;

    friend bool operator==(const Universe& a, const Universe& b) {
        return a.transitional_ == b.transitional_ && a.vars_ == b.vars_ && a.consts_ == b.consts_;
    }

  private:
    Universe(std::vector<std::string> vars, std::vector<std::int64_t> consts, bool transitional);

    std::vector<std::string> vars_;
    std::vector<std::int64_t> consts_;
    bool transitional_ = false;
    std::size_t const_base_ = 0;
    std::size_t size_ = 0;
};

using UniversePtr = std::shared_ptr<const Universe>;

bool same_universe(const UniversePtr& a, const UniversePtr& b);

} // namespace gcs
