#pragma once

#include <cstdint>

#include "copwin/graph.hpp"

namespace copwin {

struct SamplerConfig {
    int n;
    double p;
    std::uint64_t seed;
};

// G(n,p): one 64-bit draw per unordered pair in row-major order
// (0,1), (0,2), ..., (0,n-1), (1,2), ...; edge iff draw / 2^64 < p.
// Pure function of the config, bit-exact across runs and platforms.
Graph sample_gnp(const SamplerConfig& cfg);

} // namespace copwin
