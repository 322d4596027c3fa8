#include <doctest.h>

#include "copwin/domination.hpp"
#include "copwin/match.hpp"

using namespace copwin;

namespace {

struct ScriptedCops final : CopController {
    std::vector<int> start;
    std::vector<std::vector<int>> moves;
    std::size_t i = 0;

    ScriptedCops(std::vector<int> s, std::vector<std::vector<int>> m)
        : start(std::move(s)), moves(std::move(m)) {}

    std::vector<int> place(const Graph&, int) override { return start; }
    std::vector<int> move(const Graph&, const std::vector<int>& cops, int) override {
        return i < moves.size() ? moves[i++] : cops;
    }
};

struct ScriptedRobber final : RobberController {
    int start;
    std::vector<int> moves;
    std::size_t i = 0;

    ScriptedRobber(int s, std::vector<int> m) : start(s), moves(std::move(m)) {}

    int place(const Graph&, const std::vector<int>&) override { return start; }
    int move(const Graph&, const std::vector<int>&, const std::vector<int>&, int current) override {
        return i < moves.size() ? moves[i++] : current;
    }
};

} // namespace

TEST_CASE("single vertex is instant capture") {
    Graph k1(1);
    GameTable t = solve_game(k1, 1);
    auto cops = make_table_cops(t);
    auto robber = make_table_robber(t);
    MatchTrace tr = play_match(k1, 1, *cops, *robber, 100, 0);
    CHECK(tr.outcome == Outcome::Captured);
    CHECK(tr.end_round == 0);
    CHECK(tr.initial_cops == std::vector<int>{0});
    CHECK(tr.initial_robber == 0);
    CHECK(tr.rounds.empty());
}

TEST_CASE("domset cops capture on a four cycle") {
    Graph c4 = cycle_graph(4);
    DeltaResult d = delta_k(c4, 2);
    REQUIRE(d.value == 0);
    auto cops = make_domset_cops(d.witness);
    GameTable t = solve_game(c4, 2);
    auto robber = make_table_robber(t);
    MatchTrace tr = play_match(c4, 2, *cops, *robber, 100, 0);
    CHECK(tr.outcome == Outcome::Captured);
    CHECK(tr.end_round <= 2);
    CHECK(tr.initial_cops == std::vector<int>{0, 1});
}

TEST_CASE("optimal play matches the solved value") {
    Graph p3 = path_graph(3);
    GameTable tp = solve_game(p3, 1);
    auto cops = make_table_cops(tp);
    auto robber = make_table_robber(tp);
    MatchTrace tr = play_match(p3, 1, *cops, *robber, 100, 7);
    CHECK(tr.outcome == Outcome::Captured);
    CHECK(tr.seed == 7);

    Graph c4 = cycle_graph(4);
    GameTable tc = solve_game(c4, 1);
    auto cops1 = make_table_cops(tc);
    auto robber1 = make_table_robber(tc);
    MatchTrace esc = play_match(c4, 1, *cops1, *robber1, 50, 0);
    CHECK(esc.outcome == Outcome::Survived);
    CHECK(esc.end_round == 50);
    CHECK(esc.rounds.size() == 50);

    Graph c7 = cycle_graph(7);
    GameTable t7 = solve_game(c7, 2);
    auto cops2 = make_table_cops(t7);
    auto robber2 = make_table_robber(t7);
    MatchTrace tr7 = play_match(c7, 2, *cops2, *robber2, 100, 0);
    CHECK(tr7.outcome == Outcome::Captured);
    // capture takes exactly as many cop moves as the initial rank says
    CHECK(tr7.end_round == t7.capture_rank(tr7.initial_cops, tr7.initial_robber, Side::Cops));
}

TEST_CASE("illegal responses end in a fault") {
    Graph p4 = path_graph(4);

    ScriptedCops teleport{{0, 0}, {{3, 3}}}; // 0 -> 3 is not a step
    ScriptedRobber sit{3, {}};
    MatchTrace tr = play_match(p4, 2, teleport, sit, 10, 0);
    CHECK(tr.outcome == Outcome::Fault);
    CHECK(tr.fault_by == Side::Cops);
    CHECK(tr.end_round == 1);

    ScriptedCops idle{{0, 1}, {}};
    ScriptedRobber jump{3, {1}}; // 3 -> 1 is not a step
    tr = play_match(p4, 2, idle, jump, 10, 0);
    CHECK(tr.outcome == Outcome::Fault);
    CHECK(tr.fault_by == Side::Robber);

    ScriptedCops shortHanded{{0}, {}}; // wrong multiset size
    tr = play_match(p4, 2, shortHanded, sit, 10, 0);
    CHECK(tr.outcome == Outcome::Fault);
    CHECK(tr.fault_by == Side::Cops);

    ScriptedRobber outside{9, {}};
    tr = play_match(p4, 2, idle, outside, 10, 0);
    CHECK(tr.outcome == Outcome::Fault);
    CHECK(tr.fault_by == Side::Robber);
}

TEST_CASE("destination multisets may cross") {
    // cop 0 reaches only {0,5}, cop 1 only {1,3}; the sorted destination
    // {3,5} is legal via the crossed assignment.
    Graph g(6);
    g.add_edge(0, 5);
    g.add_edge(1, 3);
    g.add_edge(2, 4);

    ScriptedCops cross{{0, 1}, {{3, 5}}};
    ScriptedRobber sit{2, {}};
    MatchTrace tr = play_match(g, 2, cross, sit, 1, 0);
    CHECK(tr.outcome == Outcome::Survived);
    REQUIRE(tr.rounds.size() == 1);
    CHECK(tr.rounds[0].cops == std::vector<int>{3, 5});

    ScriptedCops bad{{0, 1}, {{3, 4}}}; // nobody reaches 4
    tr = play_match(g, 2, bad, sit, 1, 0);
    CHECK(tr.outcome == Outcome::Fault);
    CHECK(tr.fault_by == Side::Cops);
}

TEST_CASE("placing onto a cop is a round zero capture") {
    Graph p4 = path_graph(4);
    ScriptedCops idle{{2, 2}, {}};
    ScriptedRobber reckless{2, {}};
    MatchTrace tr = play_match(p4, 2, idle, reckless, 10, 0);
    CHECK(tr.outcome == Outcome::Captured);
    CHECK(tr.end_round == 0);
    CHECK(tr.rounds.empty());
}

TEST_CASE("zero rounds means survival after placement") {
    Graph p4 = path_graph(4);
    ScriptedCops idle{{0, 0}, {}};
    ScriptedRobber sit{3, {}};
    MatchTrace tr = play_match(p4, 2, idle, sit, 0, 0);
    CHECK(tr.outcome == Outcome::Survived);
    CHECK(tr.end_round == 0);
}
