// Copyright (c) gcsmc contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace gcs {

// Explicit finite labeled transition system. States and actions are
// referenced by index into the name tables.
struct FiniteLts {
    struct Transition {
        std::size_t from;
        std::size_t action;
        std::size_t to;

        friend bool operator==(const Transition&, const Transition&) = default;
        friend auto operator<=>(const Transition&, const Transition&) = default;
    };

    std::vector<std::string> states;
    std::vector<std::string> acts;
    std::vector<Transition> transitions;

    [[nodiscard]] std::optional<std::size_t> state_index(const std::string& name) const;
    [[nodiscard]] std::optional<std::size_t> action_index(const std::string& name) const;

    // Adds names on first use.
    std::size_t add_state(const std::string& name);
    std::size_t add_action(const std::string& name);
    void add_transition(const std::string& from, const std::string& action, const std::string& to);

    // Sorted, duplicate-free transition list.
    void normalize();

    // Throws InvalidInput if a transition references an undeclared index.
    void check() const;

    friend bool operator==(const FiniteLts&, const FiniteLts&) = default;
};

} // namespace gcs
