// Copyright (c) gcsmc contributors.
// SPDX-License-Identifier: Apache-2.0
#include "gcs/lts.hpp"

#include <algorithm>

#include "gcs/error.hpp"

namespace gcs {

namespace {

std::optional<std::size_t> find_name(const std::vector<std::string>& names, const std::string& n) {
    auto it = std::find(names.begin(), names.end(), n);
    if (it == names.end()) return std::nullopt;
    return static_cast<std::size_t>(it - names.begin());
}

} // namespace

std::optional<std::size_t> FiniteLts::state_index(const std::string& name) const { return find_name(states, name); }

std::optional<std::size_t> FiniteLts::action_index(const std::string& name) const { return find_name(acts, name); }

std::size_t FiniteLts::add_state(const std::string& name) {
    if (auto i = state_index(name)) return *i;
    states.push_back(name);
    return states.size() - 1;
}

std::size_t FiniteLts::add_action(const std::string& name) {
    if (auto i = action_index(name)) return *i;
    acts.push_back(name);
    return acts.size() - 1;
}

void FiniteLts::add_transition(const std::string& from, const std::string& action, const std::string& to) {
    const auto f = add_state(from);
    const auto a = add_action(action);
    const auto t = add_state(to);
    transitions.push_back({f, a, t});
}

void FiniteLts::normalize() {
    std::sort(transitions.begin(), transitions.end());
    transitions.erase(std::unique(transitions.begin(), transitions.end()), transitions.end());
}

void FiniteLts::check() const {
    for (const auto& t : transitions) {
        if (t.from >= states.size() || t.to >= states.size() || t.action >= acts.size()) {
            throw InvalidInput("transition references an undeclared state or action");
        }
    }
}

} // namespace gcs
