#include "copwin/experiments.hpp"

#include <cmath>
#include <stdexcept>

#include "copwin/domination.hpp"
#include "copwin/errors.hpp"
#include "copwin/rng.hpp"

namespace copwin {

EventKind parse_event_kind(const std::string& name) {
    if (name == "kcopwin") return EventKind::KCopWin;
    if (name == "kdom") return EventKind::KDom;
    if (name == "universal") return EventKind::Universal;
    if (name == "dismantlable") return EventKind::Dismantlable;
    throw std::invalid_argument("unknown event: " + name);
}

std::string event_kind_name(EventKind kind) {
    switch (kind) {
        case EventKind::KCopWin: return "kcopwin";
        case EventKind::KDom: return "kdom";
        case EventKind::Universal: return "universal";
        case EventKind::Dismantlable: return "dismantlable";
    }
    throw std::logic_error("event_kind_name: bad kind");
}

bool event_holds(const Graph& g, const EventSpec& e, std::uint64_t state_budget) {
    switch (e.kind) {
        case EventKind::KCopWin: return is_k_cop_win(g, e.k, state_budget);
        case EventKind::KDom: return delta_k(g, e.k).value == 0;
        case EventKind::Universal: return has_universal_vertex(g).has_value();
        case EventKind::Dismantlable: return dismantling_order(g).success;
    }
    throw std::logic_error("event_holds: bad kind");
}

EnumerationResult enumerate_labelled(int n, const EventSpec& e, bool allow_seven,
                                     std::uint64_t state_budget) {
    if (n < 1 || n > (allow_seven ? 7 : 6))
        throw std::invalid_argument("enumerate_labelled: n over the enumeration cap");

    const int bits = n * (n - 1) / 2;
    const std::uint64_t total = std::uint64_t{1} << bits;
    std::uint64_t count = 0;
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        Graph g(n);
        int bit = 0;
        for (int v = 1; v < n; ++v)
            for (int u = 0; u < v; ++u, ++bit)
                if (mask >> bit & 1) g.add_edge(u, v);
        if (event_holds(g, e, state_budget)) ++count;
    }
    return {count, total};
}

WilsonInterval wilson_interval(std::uint64_t successes, std::uint64_t trials, double z) {
    if (trials == 0) throw std::invalid_argument("wilson_interval: zero trials");
    const double nt = static_cast<double>(trials);
    const double p = static_cast<double>(successes) / nt;
    const double z2 = z * z;
    const double denom = 1.0 + z2 / nt;
    const double center = (p + z2 / (2.0 * nt)) / denom;
    const double half = z * std::sqrt(p * (1.0 - p) / nt + z2 / (4.0 * nt * nt)) / denom;
    return {center - half, center + half};
}

Estimate estimate_probability(const SamplerConfig& cfg, const EventSpec& e, std::uint64_t trials,
                              std::uint64_t state_budget) {
    if (trials < 1) throw std::invalid_argument("estimate_probability: need trials >= 1");

    Estimate est;
    est.trials = trials;
    for (std::uint64_t i = 0; i < trials; ++i) {
        Graph g = sample_gnp({cfg.n, cfg.p, mix(cfg.seed, i)});
        try {
            if (event_holds(g, e, state_budget)) ++est.successes;
        } catch (const budget_error&) {
            ++est.budget_errors;
        }
    }
    est.point = static_cast<double>(est.successes) / static_cast<double>(trials);
    auto ci = wilson_interval(est.successes, trials, kZ95);
    est.ci_low = ci.low;
    est.ci_high = ci.high;
    return est;
}

} // namespace copwin
