#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "copwin/graph.hpp"

namespace copwin {

struct Neighborhoods {
    VertexSet open;   // N(v)
    VertexSet closed; // N[v]
    VertexSet non;    // N^c(v) = V \ N[v]
};

Neighborhoods neighborhoods(const Graph& g, int v);

// N^c(S): vertices outside the union of closed neighborhoods of S.
VertexSet common_non_neighborhood(const Graph& g, const VertexSet& s);

bool is_dominating_set(const Graph& g, const VertexSet& s);

struct DeltaResult {
    int value;
    VertexSet witness;
};

inline constexpr std::uint64_t kDefaultWorkLimit = 50'000'000;

// delta_k = min over all k-sets S of |N^c(S)|, by exhaustive search.
// work_limit counts examined subsets; exceeding it throws budget_error.
DeltaResult delta_k(const Graph& g, int k, std::uint64_t work_limit = kDefaultWorkLimit);

// All corners u (N[u] contained in N[w] for some w != u), each with the
// lowest-index witness w.
std::vector<std::pair<int, int>> corners(const Graph& g);

struct DismantlingResult {
    bool success;
    std::vector<std::pair<int, int>> order; // (deleted corner, witness), original labels
};

// Greedy dismantling: repeatedly delete the lowest-index corner. success
// means the graph reduced to a single vertex; on failure order holds the
// maximal prefix found.
DismantlingResult dismantling_order(const Graph& g);

std::optional<int> has_universal_vertex(const Graph& g);

} // namespace copwin
