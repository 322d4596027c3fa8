#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "copwin/graph.hpp"
#include "copwin/match.hpp"

namespace copwin {

enum class EscapeMode { Neighbor, NonNeighbor };

// Lowest vertex w' adjacent to w, in N(v) (Neighbor) or N^c(v)
// (NonNeighbor), adjacent to no blocker, outside blockers and {v, w}.
std::optional<int> escape_vertex(const Graph& g, int v, const VertexSet& blockers, int w,
                                 EscapeMode mode);

struct GreedyContext {
    VertexSet S; // |S| = k
    int v;       // v in N^c(S)
    int k;
};

GreedyContext make_greedy_context(const Graph& g, const VertexSet& S, int v);

enum class CertificateKind { GreedyEscape, Evasion };

struct Certificate {
    CertificateKind kind;
    int k;
    bool verdict;
    // GreedyEscape witnesses
    VertexSet S;
    int v = -1;
    // Evasion witnesses
    int q = 0;
    int dangerous_count = 0;
    int delta = 0;
};

// True iff some (S, v) with v in N^c(S) survives every escape query:
// for all T proper subset of S, U subset of W with |T|+|U| = k and
// w in W \ U, an escape vertex exists in both modes. Lowest (S, v)
// witness is returned. work_limit counts escape queries.
Certificate greedy_escape_certificate(const Graph& g, int k,
                                      std::uint64_t work_limit = kDefaultStateBudget);

// Next greedy move. prev_cops empty means placement or unknown history;
// when prev_cops equals cops the robber passes. Throws no_safe_move_error
// when no rule yields a reachable destination.
int greedy_robber_move(const Graph& g, const GreedyContext& ctx, const std::vector<int>& cops,
                       std::optional<int> current,
                       const std::vector<int>& prev_cops = {});

struct DangerReport {
    int k = 0;
    int q = 0;
    std::map<int, VertexSet> dangerous; // vertex -> lowest threatening set A
    int delta = 0;                      // delta_k of the same graph

    VertexSet dangerous_set(int n) const {
        VertexSet s(n);
        for (const auto& [b, a] : dangerous) s.set(b);
        return s;
    }
};

// Exhaustive scan: b is dangerous iff some k-set A avoiding b has
// |N^c(A) meet N(b)| <= 2q. The lowest such A is recorded as witness.
DangerReport dangerous_vertices(const Graph& g, int k, int q,
                                std::uint64_t work_limit = kDefaultStateBudget);

// Verdict: dangerous count < q and delta_k >= q.
Certificate evasion_certificate(const Graph& g, int k, int q,
                                std::uint64_t work_limit = kDefaultStateBudget);

// Not dangerous and outside every cop's closed neighborhood.
VertexSet safe_vertices(const Graph& g, const std::vector<int>& cops, const DangerReport& report);

// Lowest safe vertex, restricted to N[current] after placement. Passing
// is legal whenever current stays safe.
int evasion_robber_move(const Graph& g, const DangerReport& report, const std::vector<int>& cops,
                        std::optional<int> current,
                        const std::vector<int>& prev_cops = {});

std::unique_ptr<RobberController> make_greedy_robber(const Graph& g, const GreedyContext& ctx);
std::unique_ptr<RobberController> make_evasion_robber(const Graph& g, DangerReport report);

} // namespace copwin
