#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "copwin/game.hpp"
#include "copwin/graph.hpp"

namespace copwin {

enum class Outcome { Captured, Survived, Fault };

struct MatchTrace {
    std::vector<int> initial_cops;
    int initial_robber = -1;

    struct Round {
        std::vector<int> cops; // positions after the cop move
        int robber;            // position after the robber move (-1 if captured first)
    };
    std::vector<Round> rounds;

    Outcome outcome = Outcome::Survived;
    int end_round = 0;        // capture/fault round, or max_rounds on survival
    Side fault_by = Side::Cops; // meaningful only for Fault
    std::uint64_t seed = 0;
};

// Cop controllers return a destination multiset; it is legal when some
// assignment of destinations to cops moves each within its closed
// neighborhood. Robbers see the cops before and after their move so pass
// rules are observable.
struct CopController {
    virtual ~CopController() = default;
    virtual std::vector<int> place(const Graph& g, int k) = 0;
    virtual std::vector<int> move(const Graph& g, const std::vector<int>& cops, int robber) = 0;
};

struct RobberController {
    virtual ~RobberController() = default;
    virtual int place(const Graph& g, const std::vector<int>& cops) = 0;
    virtual int move(const Graph& g, const std::vector<int>& cops,
                     const std::vector<int>& prev_cops, int current) = 0;
};

// Cops and robber both play from the solved table.
std::unique_ptr<CopController> make_table_cops(const GameTable& table);
std::unique_ptr<RobberController> make_table_robber(const GameTable& table);

// Cops sit on a dominating set and capture as soon as the robber appears
// in someone's closed neighborhood.
std::unique_ptr<CopController> make_domset_cops(const VertexSet& s);

// Rounds are cop move then robber move; placement is round 0 with cops
// first and the robber answering (placing onto a cop is Captured(0)).
// An illegal controller response ends the match with Fault, never fixed up.
MatchTrace play_match(const Graph& g, int k, CopController& cops, RobberController& robber,
                      int max_rounds, std::uint64_t seed);

} // namespace copwin
