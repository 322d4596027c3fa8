#pragma once

#include <cstdint>
#include <vector>

#include "copwin/graph.hpp"

namespace copwin {

enum class Side : int { Cops = 0, Robber = 1 };

// Game position: k cops on a sorted multiset of vertices (stacking
// allowed), the robber on a vertex, and whose turn it is.
struct Position {
    std::vector<int> cops; // sorted ascending
    int robber;
    Side to_move;
};

inline constexpr std::uint64_t kDefaultStateBudget = 50'000'000;

// Fully evaluated pursuit game for (g, k). Status covers every position
// (determinacy); rank counts the cop moves still needed from a CopWin
// position under optimal play, and is -1 on RobberWin positions.
class GameTable {
public:
    GameTable(const Graph& g, int k, std::uint64_t state_budget);

    int order() const { return n_; }
    int cops() const { return k_; }

    // Number of sorted cop multisets, C(n+k-1, k).
    std::uint64_t multiset_count() const { return msets_; }
    std::uint64_t state_count() const { return msets_ * n_ * 2; }

    bool cop_win(const std::vector<int>& cops, int robber, Side s) const {
        return rank_[id(rank_of(cops), robber, s)] >= 0;
    }

    // -1 when the position is RobberWin.
    std::int32_t capture_rank(const std::vector<int>& cops, int robber, Side s) const {
        return rank_[id(rank_of(cops), robber, s)];
    }

    std::uint64_t cop_win_states() const;
    std::int32_t max_rank() const;

    // Colex rank of a sorted multiset and its inverse.
    std::uint64_t rank_of(const std::vector<int>& cops) const;
    std::vector<int> unrank(std::uint64_t r) const;

    // Internal flat indexing, exposed for the solver and strategy extraction.
    std::size_t id(std::uint64_t mset_rank, int robber, Side s) const {
        return (mset_rank * n_ + robber) * 2 + static_cast<int>(s);
    }

    friend GameTable solve_game(const Graph& g, int k, std::uint64_t state_budget);

private:
    int n_, k_;
    std::uint64_t msets_;
    std::vector<std::vector<std::uint64_t>> binom_; // binom_[m][j], m <= n+k
    std::vector<std::int32_t> rank_;                // -1 = RobberWin

    void solve(const Graph& g);
};

// Least fixed point over the game graph: capture positions (robber on a
// cop) are CopWin rank 0 and wins propagate backward; everything outside
// the fixed point is RobberWin. Throws budget_error when
// C(n+k-1,k) * n * 2 exceeds state_budget.
GameTable solve_game(const Graph& g, int k, std::uint64_t state_budget = kDefaultStateBudget);

// True iff some cop placement wins against every robber placement
// (placing onto a cop is immediate capture).
bool is_k_cop_win(const GameTable& table);
bool is_k_cop_win(const Graph& g, int k, std::uint64_t state_budget = kDefaultStateBudget);

// Smallest k with is_k_cop_win(g, k). The search is capped upfront by the
// smallest k with delta_k = 0, a guaranteed win.
int cop_number(const Graph& g, std::uint64_t state_budget = kDefaultStateBudget);

struct OptimalMove {
    std::vector<int> cops; // destination multiset, set when Cops moved
    int robber = -1;       // destination vertex, set when Robber moved
};

// Strategy extraction. Winning cops decrease rank (ties: lexicographically
// smallest destination); a winning robber keeps a RobberWin position
// (lowest destination); the losing side stalls: cops minimize successor
// rank with RobberWin counted as infinite, the robber maximizes it,
// lowest destination on ties.
OptimalMove optimal_move(const GameTable& table, const Graph& g, const Position& p);

} // namespace copwin
