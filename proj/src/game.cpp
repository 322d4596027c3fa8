#include "copwin/game.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "copwin/domination.hpp"
#include "copwin/errors.hpp"

namespace copwin {

namespace {

std::uint64_t checked_binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    std::uint64_t r = 1;
    for (int i = 1; i <= k; ++i) {
        std::uint64_t t;
        if (__builtin_mul_overflow(r, static_cast<std::uint64_t>(n - k + i), &t))
            throw budget_error("game: state space overflows");
        r = t / i; // exact: r holds C(n-k+i-1, i-1) * (n-k+i) divisible by i
    }
    return r;
}

} // namespace

GameTable::GameTable(const Graph& g, int k, std::uint64_t state_budget) : n_(g.order()), k_(k) {
    if (k < 1) throw std::invalid_argument("solve_game: k must be at least 1");

    msets_ = checked_binomial(n_ + k_ - 1, k_);
    std::uint64_t states;
    if (__builtin_mul_overflow(msets_, static_cast<std::uint64_t>(n_) * 2, &states) ||
        states > state_budget)
        throw budget_error("solve_game: state budget exceeded");

    binom_.assign(n_ + k_ + 1, std::vector<std::uint64_t>(k_ + 2, 0));
    for (int m = 0; m <= n_ + k_; ++m) {
        binom_[m][0] = 1;
        for (int j = 1; j <= k_ + 1; ++j)
            binom_[m][j] = m == 0 ? 0 : binom_[m - 1][j - 1] + binom_[m - 1][j];
    }

    rank_.assign(states, -1);
    solve(g);
}

std::uint64_t GameTable::rank_of(const std::vector<int>& cops) const {
    std::uint64_t r = 0;
    for (int i = 0; i < k_; ++i) r += binom_[cops[i] + i][i + 1];
    return r;
}

std::vector<int> GameTable::unrank(std::uint64_t r) const {
    std::vector<int> cops(k_);
    for (int i = k_ - 1; i >= 0; --i) {
        int d = n_ - 1 + i; // largest possible cops[i] + i
        while (binom_[d][i + 1] > r) --d;
        r -= binom_[d][i + 1];
        cops[i] = d - i;
    }
    return cops;
}

std::uint64_t GameTable::cop_win_states() const {
    std::uint64_t c = 0;
    for (auto r : rank_) c += r >= 0;
    return c;
}

std::int32_t GameTable::max_rank() const {
    std::int32_t m = -1;
    for (auto r : rank_) m = std::max(m, r);
    return m;
}

void GameTable::solve(const Graph& g) {
    const int n = n_, k = k_;

    std::vector<std::vector<int>> nbr(n); // closed neighborhoods, ascending
    for (int v = 0; v < n; ++v) nbr[v] = g.closed_neighborhood(v).to_vector();

    std::vector<std::int32_t> cnt(rank_.size(), 0);
    for (std::uint64_t cr = 0; cr < msets_; ++cr)
        for (int r = 0; r < n; ++r)
            cnt[id(cr, r, Side::Robber)] = static_cast<std::int32_t>(nbr[r].size());

    // Rank buckets keep the retrograde wavefront monotone, which makes the
    // last decrement of a robber counter the max-rank successor.
    std::vector<std::vector<std::size_t>> buckets(1);
    auto mark = [&](std::size_t s, std::int32_t rho) {
        rank_[s] = rho;
        if (buckets.size() <= static_cast<std::size_t>(rho)) buckets.resize(rho + 1);
        buckets[rho].push_back(s);
    };

    std::vector<int> cops(k), dest(k), sorted(k);
    for (std::uint64_t cr = 0; cr < msets_; ++cr) {
        cops = unrank(cr);
        for (int i = 0; i < k; ++i) {
            int r = cops[i];
            if (i > 0 && r == cops[i - 1]) continue;
            mark(id(cr, r, Side::Cops), 0);
            mark(id(cr, r, Side::Robber), 0);
        }
    }

    // Enumerates every joint cop move from cops (product of closed
    // neighborhoods); the relation is symmetric, so the same enumeration
    // serves as predecessor generation.
    auto for_each_joint = [&](auto&& f) {
        auto rec = [&](auto&& self, int i) -> void {
            if (i == k) {
                sorted = dest;
                std::sort(sorted.begin(), sorted.end());
                f(sorted);
                return;
            }
            for (int d : nbr[cops[i]]) {
                dest[i] = d;
                self(self, i + 1);
            }
        };
        rec(rec, 0);
    };

    for (std::size_t rho = 0; rho < buckets.size(); ++rho) {
        for (std::size_t qi = 0; qi < buckets[rho].size(); ++qi) {
            std::size_t s = buckets[rho][qi];
            Side side = static_cast<Side>(s & 1);
            int r = static_cast<int>((s >> 1) % n);
            std::uint64_t cr = (s >> 1) / n;

            if (side == Side::Robber) {
                cops = unrank(cr);
                for_each_joint([&](const std::vector<int>& pred) {
                    std::size_t t = id(rank_of(pred), r, Side::Cops);
                    if (rank_[t] < 0) mark(t, static_cast<std::int32_t>(rho) + 1);
                });
            } else {
                for (int rp : nbr[r]) {
                    std::size_t t = id(cr, rp, Side::Robber);
                    if (rank_[t] >= 0) continue;
                    if (--cnt[t] == 0) mark(t, static_cast<std::int32_t>(rho));
                }
            }
        }
        buckets[rho].clear();
        buckets[rho].shrink_to_fit();
    }
}

GameTable solve_game(const Graph& g, int k, std::uint64_t state_budget) {
    return GameTable(g, k, state_budget);
}

bool is_k_cop_win(const GameTable& table) {
    const int n = table.order();
    for (std::uint64_t cr = 0; cr < table.multiset_count(); ++cr) {
        const auto cops = table.unrank(cr);
        bool wins = true;
        for (int r = 0; r < n && wins; ++r)
            wins = table.capture_rank(cops, r, Side::Cops) >= 0;
        if (wins) return true;
    }
    return false;
}

bool is_k_cop_win(const Graph& g, int k, std::uint64_t state_budget) {
    return is_k_cop_win(solve_game(g, k, state_budget));
}

int cop_number(const Graph& g, std::uint64_t state_budget) {
    const int n = g.order();

    // delta_k = 0 makes k cops a guaranteed win, capping the solver search.
    int cap = n;
    for (int k = 1; k <= n; ++k) {
        try {
            if (delta_k(g, k).value == 0) {
                cap = k;
                break;
            }
        } catch (const budget_error&) {
            break; // cap stays n: n cops cover every vertex
        }
    }

    for (int k = 1; k < cap; ++k)
        if (is_k_cop_win(g, k, state_budget)) return k;
    return cap;
}

OptimalMove optimal_move(const GameTable& table, const Graph& g, const Position& p) {
    const int n = g.order();
    const int k = table.cops();
    if (static_cast<int>(p.cops.size()) != k || !std::is_sorted(p.cops.begin(), p.cops.end()))
        throw std::invalid_argument("optimal_move: cops must be a sorted multiset of size k");
    if (n != table.order()) throw std::invalid_argument("optimal_move: table/graph mismatch");
    for (int c : p.cops)
        if (c < 0 || c >= n) throw std::invalid_argument("optimal_move: cop out of range");
    if (p.robber < 0 || p.robber >= n)
        throw std::invalid_argument("optimal_move: robber out of range");

    constexpr std::int64_t kInf = std::numeric_limits<std::int64_t>::max();
    auto score = [&](std::int32_t rank) { return rank < 0 ? kInf : static_cast<std::int64_t>(rank); };

    OptimalMove mv;
    if (p.to_move == Side::Cops) {
        std::vector<int> dest(k), sorted(k), best;
        std::int64_t best_score = 0;
        bool have = false;
        auto rec = [&](auto&& self, int i) -> void {
            if (i == k) {
                sorted = dest;
                std::sort(sorted.begin(), sorted.end());
                std::int64_t sc = score(table.capture_rank(sorted, p.robber, Side::Robber));
                if (!have || sc < best_score || (sc == best_score && sorted < best)) {
                    have = true;
                    best_score = sc;
                    best = sorted;
                }
                return;
            }
            for (int d = g.closed_neighborhood(p.cops[i]).first(); d >= 0;
                 d = g.closed_neighborhood(p.cops[i]).next(d)) {
                dest[i] = d;
                self(self, i + 1);
            }
        };
        rec(rec, 0);
        mv.cops = best;
    } else {
        const VertexSet& moves = g.closed_neighborhood(p.robber);
        int best = -1;
        std::int64_t best_score = -1;
        for (int r = moves.first(); r >= 0; r = moves.next(r)) {
            std::int64_t sc = score(table.capture_rank(p.cops, r, Side::Cops));
            if (sc > best_score) {
                best_score = sc;
                best = r;
            }
        }
        mv.robber = best;
    }
    return mv;
}

} // namespace copwin
