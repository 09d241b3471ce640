// Copyright (c) gcsmc contributors.
// SPDX-License-Identifier: Apache-2.0
#include "gcs/universe.hpp"

#include <algorithm>
#include <set>

#include "gcs/error.hpp"

namespace gcs {

std::string Node::str() const {
    switch (kind) {
    case Kind::Var: return name;
    case Kind::Primed: return name + "'";
    case Kind::Const: return std::to_string(value);
    }
    return {};
}

std::string GapClause::str() const {
    return lhs.str() + " - " + rhs.str() + " >= " + std::to_string(offset);
}

Universe::Universe(std::vector<std::string> vars, std::vector<std::int64_t> consts, bool transitional)
    : vars_(std::move(vars)), consts_(std::move(consts)), transitional_(transitional) {
    std::sort(consts_.begin(), consts_.end());
    consts_.erase(std::unique(consts_.begin(), consts_.end()), consts_.end());
    std::set<std::string> seen;
    for (const auto& v : vars_) {
        if (!seen.insert(v).second) {
            throw InvalidInput("duplicate variable '" + v + "'");
        }
    }
    const_base_ = transitional_ ? 2 * vars_.size() : vars_.size();
    size_ = const_base_ + consts_.size();
}

UniversePtr Universe::state(std::vector<std::string> vars, std::vector<std::int64_t> consts) {
    return UniversePtr(new Universe(std::move(vars), std::move(consts), false));
}

UniversePtr Universe::transitional(std::vector<std::string> vars, std::vector<std::int64_t> consts) {
    return UniversePtr(new Universe(std::move(vars), std::move(consts), true));
}

Node Universe::node(std::size_t idx) const {
    if (idx >= const_base_) return Node::constant(consts_[idx - const_base_]);
    if (idx < vars_.size()) return Node::var(vars_[idx]);
    return Node::primed(vars_[idx - vars_.size()]);
}

std::optional<std::size_t> Universe::find_var(const std::string& name) const {
    auto it = std::find(vars_.begin(), vars_.end(), name);
    if (it == vars_.end()) return std::nullopt;
    return static_cast<std::size_t>(it - vars_.begin());
}

std::optional<std::size_t> Universe::find(const Node& n) const {
    switch (n.kind) {
    case Node::Kind::Var: return find_var(n.name);
    case Node::Kind::Primed: {
        if (!transitional_) return std::nullopt;
        auto i = find_var(n.name);
        if (!i) return std::nullopt;
        return primed_node(*i);
    }
    case Node::Kind::Const: {
        auto it = std::lower_bound(consts_.begin(), consts_.end(), n.value);
        if (it == consts_.end() || *it != n.value) return std::nullopt;
        return const_base_ + static_cast<std::size_t>(it - consts_.begin());
    }
    }
    return std::nullopt;
}

std::size_t Universe::index_of(const Node& n) const {
    if (auto i = find(n)) return *i;
    switch (n.kind) {
    case Node::Kind::Const: throw InvalidInput("undeclared constant " + n.str());
    case Node::Kind::Primed:
        if (!transitional_) throw InvalidInput("primed variable " + n.str() + " not allowed here");
        [[fallthrough]];
    default: throw InvalidInput("unknown variable '" + n.name + "'");
    }
}

UniversePtr Universe::state_part() const { return state(vars_, consts_); }

bool same_universe(const UniversePtr& a, const UniversePtr& b) {
    return a == b || (a && b && *a == *b);
}

} // namespace gcs
