#pragma once

#include <stdexcept>

namespace copwin {

// Thrown when a configured state or work budget would be exceeded.
// Callers distinguish this from bad input: budgets are internal limits.
struct budget_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Thrown by robber strategies when no rule produces a legal destination.
struct no_safe_move_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace copwin
