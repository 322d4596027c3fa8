#include "copwin/match.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace copwin {

namespace {

constexpr std::int64_t kInf = std::numeric_limits<std::int64_t>::max();

std::int64_t score_of(std::int32_t rank) {
    return rank < 0 ? kInf : static_cast<std::int64_t>(rank);
}

// Legal iff destinations can be matched to cops with each move inside a
// closed neighborhood. k is small; backtracking over assignments is fine.
bool joint_move_legal(const Graph& g, const std::vector<int>& from, std::vector<int> to) {
    auto rec = [&](auto&& self, std::size_t i) -> bool {
        if (i == from.size()) return true;
        for (std::size_t j = i; j < to.size(); ++j) {
            if (!g.closed_neighborhood(from[i]).test(to[j])) continue;
            std::swap(to[i], to[j]);
            if (self(self, i + 1)) return true;
            std::swap(to[i], to[j]);
        }
        return false;
    };
    return rec(rec, 0);
}

struct TableCops final : CopController {
    const GameTable& table;
    explicit TableCops(const GameTable& t) : table(t) {}

    // Placement minimizing the adversarial robber's reply: smallest worst
    // capture rank, RobberWin counted infinite, lex-lowest multiset on ties.
    std::vector<int> place(const Graph& g, int k) override {
        (void)k;
        const int n = g.order();
        std::vector<int> best;
        std::int64_t best_worst = 0;
        for (std::uint64_t cr = 0; cr < table.multiset_count(); ++cr) {
            auto cops = table.unrank(cr);
            std::int64_t worst = 0;
            for (int r = 0; r < n; ++r)
                worst = std::max(worst, score_of(table.capture_rank(cops, r, Side::Cops)));
            if (best.empty() || worst < best_worst || (worst == best_worst && cops < best)) {
                best = std::move(cops);
                best_worst = worst;
            }
        }
        return best;
    }

    std::vector<int> move(const Graph& g, const std::vector<int>& cops, int robber) override {
        return optimal_move(table, g, {cops, robber, Side::Cops}).cops;
    }
};

struct TableRobber final : RobberController {
    const GameTable& table;
    explicit TableRobber(const GameTable& t) : table(t) {}

    int place(const Graph& g, const std::vector<int>& cops) override {
        int best = -1;
        std::int64_t best_score = -1;
        for (int r = 0; r < g.order(); ++r) {
            std::int64_t sc = score_of(table.capture_rank(cops, r, Side::Cops));
            if (sc > best_score) {
                best_score = sc;
                best = r;
            }
        }
        return best;
    }

    int move(const Graph& g, const std::vector<int>& cops, const std::vector<int>&,
             int current) override {
        return optimal_move(table, g, {cops, current, Side::Robber}).robber;
    }
};

struct DomsetCops final : CopController {
    std::vector<int> home;
    explicit DomsetCops(const VertexSet& s) : home(s.to_vector()) {}

    std::vector<int> place(const Graph&, int k) override {
        if (static_cast<int>(home.size()) != k)
            throw std::invalid_argument("domset cops: set size differs from k");
        return home;
    }

    std::vector<int> move(const Graph& g, const std::vector<int>& cops, int robber) override {
        std::vector<int> dest = cops;
        for (std::size_t i = 0; i < cops.size(); ++i) {
            if (g.closed_neighborhood(cops[i]).test(robber)) {
                dest[i] = robber;
                break;
            }
        }
        return dest;
    }
};

} // namespace

std::unique_ptr<CopController> make_table_cops(const GameTable& table) {
    return std::make_unique<TableCops>(table);
}

std::unique_ptr<RobberController> make_table_robber(const GameTable& table) {
    return std::make_unique<TableRobber>(table);
}

std::unique_ptr<CopController> make_domset_cops(const VertexSet& s) {
    return std::make_unique<DomsetCops>(s);
}

MatchTrace play_match(const Graph& g, int k, CopController& cop_ctrl, RobberController& rob_ctrl,
                      int max_rounds, std::uint64_t seed) {
    const int n = g.order();
    MatchTrace tr;
    tr.seed = seed;

    auto in_range = [&](int v) { return v >= 0 && v < n; };
    auto fault = [&](Side side, int round) {
        tr.outcome = Outcome::Fault;
        tr.fault_by = side;
        tr.end_round = round;
        return tr;
    };
    auto on_cop = [&](const std::vector<int>& cops, int r) {
        return std::binary_search(cops.begin(), cops.end(), r);
    };

    auto cops = cop_ctrl.place(g, k);
    std::sort(cops.begin(), cops.end());
    if (static_cast<int>(cops.size()) != k ||
        !std::all_of(cops.begin(), cops.end(), in_range))
        return fault(Side::Cops, 0);
    tr.initial_cops = cops;

    int robber = rob_ctrl.place(g, cops);
    if (!in_range(robber)) return fault(Side::Robber, 0);
    tr.initial_robber = robber;
    if (on_cop(cops, robber)) {
        tr.outcome = Outcome::Captured;
        tr.end_round = 0;
        return tr;
    }

    for (int round = 1; round <= max_rounds; ++round) {
        auto dest = cop_ctrl.move(g, cops, robber);
        std::sort(dest.begin(), dest.end());
        if (static_cast<int>(dest.size()) != k ||
            !std::all_of(dest.begin(), dest.end(), in_range) ||
            !joint_move_legal(g, cops, dest))
            return fault(Side::Cops, round);
        auto prev = std::move(cops);
        cops = std::move(dest);
        tr.rounds.push_back({cops, -1});

        if (on_cop(cops, robber)) {
            tr.outcome = Outcome::Captured;
            tr.end_round = round;
            return tr;
        }

        int rdest = rob_ctrl.move(g, cops, prev, robber);
        if (!in_range(rdest) || !g.closed_neighborhood(robber).test(rdest))
            return fault(Side::Robber, round);
        robber = rdest;
        tr.rounds.back().robber = robber;

        if (on_cop(cops, robber)) {
            tr.outcome = Outcome::Captured;
            tr.end_round = round;
            return tr;
        }
    }

    tr.outcome = Outcome::Survived;
    tr.end_round = max_rounds;
    return tr;
}

} // namespace copwin
