#pragma once

#include <cstdint>
#include <string>

#include "copwin/game.hpp"
#include "copwin/graph.hpp"
#include "copwin/sampling.hpp"

namespace copwin {

enum class EventKind { KCopWin, KDom, Universal, Dismantlable };

struct EventSpec {
    EventKind kind;
    int k = 1; // used by KCopWin and KDom
};

EventKind parse_event_kind(const std::string& name);
std::string event_kind_name(EventKind kind);

bool event_holds(const Graph& g, const EventSpec& e,
                 std::uint64_t state_budget = kDefaultStateBudget);

struct EnumerationResult {
    std::uint64_t count;
    std::uint64_t total; // 2^C(n,2)
};

// Exact count over all labelled graphs on n vertices, iterating the
// C(n,2) triangle bits as a counter. n <= 6 unless allow_seven.
EnumerationResult enumerate_labelled(int n, const EventSpec& e, bool allow_seven = false,
                                     std::uint64_t state_budget = kDefaultStateBudget);

struct Estimate {
    std::uint64_t trials = 0;
    std::uint64_t successes = 0;
    double point = 0;
    double ci_low = 0, ci_high = 0; // Wilson 95%
    std::uint64_t budget_errors = 0;
};

struct WilsonInterval {
    double low, high;
};

WilsonInterval wilson_interval(std::uint64_t successes, std::uint64_t trials, double z);

inline constexpr double kZ95 = 1.959963984540054;
inline constexpr double kZ999 = 3.290526731491926;

// Monte Carlo estimate of P(e) under G(cfg.n, cfg.p); trial i uses seed
// mix(cfg.seed, i). Solver budget errors are counted, not dropped.
Estimate estimate_probability(const SamplerConfig& cfg, const EventSpec& e, std::uint64_t trials,
                              std::uint64_t state_budget = kDefaultStateBudget);

} // namespace copwin
