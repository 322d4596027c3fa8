#include "copwin/sampling.hpp"

#include <cmath>
#include <stdexcept>

#include "copwin/rng.hpp"

namespace copwin {

Graph sample_gnp(const SamplerConfig& cfg) {
    if (cfg.n < 1) throw std::invalid_argument("sample_gnp: n must be positive");
    if (!(cfg.p >= 0.0 && cfg.p <= 1.0)) throw std::invalid_argument("sample_gnp: p outside [0,1]");

    // draw / 2^64 < p, decided exactly: long double holds both the 64-bit
    // draw and p * 2^64 without rounding.
    const long double threshold = std::ldexp(static_cast<long double>(cfg.p), 64);

    Graph g(cfg.n);
    SplitMix64 rng(cfg.seed);
    for (int u = 0; u < cfg.n; ++u) {
        for (int v = u + 1; v < cfg.n; ++v) {
            if (static_cast<long double>(rng.next()) < threshold) g.add_edge(u, v);
        }
    }
    return g;
}

} // namespace copwin
