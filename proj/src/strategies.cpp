#include "copwin/strategies.hpp"

#include <algorithm>
#include <numeric>

#include "copwin/domination.hpp"
#include "copwin/errors.hpp"

namespace copwin {

namespace {

bool next_combination(std::vector<int>& c, int n) {
    int k = static_cast<int>(c.size());
    for (int i = k - 1; i >= 0; --i) {
        if (c[i] < n - k + i) {
            ++c[i];
            for (int j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
            return true;
        }
    }
    return false;
}

VertexSet cop_coverage(const Graph& g, const std::vector<int>& cops) {
    VertexSet covered(g.order());
    for (int c : cops) covered |= g.closed_neighborhood(c);
    return covered;
}

} // namespace

std::optional<int> escape_vertex(const Graph& g, int v, const VertexSet& blockers, int w,
                                 EscapeMode mode) {
    if (v == w || blockers.test(v) || blockers.test(w))
        throw std::invalid_argument("escape_vertex: v, w must be distinct non-blockers");

    VertexSet cand = mode == EscapeMode::Neighbor
                         ? g.open_neighborhood(v)
                         : g.closed_neighborhood(v).complement();
    cand &= g.open_neighborhood(w);
    cand.reset(v);
    cand.reset(w);
    for (int b = blockers.first(); b >= 0; b = blockers.next(b))
        cand.subtract(g.closed_neighborhood(b));

    int r = cand.first();
    return r >= 0 ? std::optional<int>(r) : std::nullopt;
}

GreedyContext make_greedy_context(const Graph& g, const VertexSet& S, int v) {
    if (!common_non_neighborhood(g, S).test(v))
        throw std::invalid_argument("greedy context: v must lie in N^c(S)");
    return GreedyContext{S, v, S.count()};
}

namespace {

// All escape queries for a fixed (S, v): every T proper subset of S,
// U subset of W with |T| + |U| = k, w in W \ U, both modes.
bool greedy_witness_ok(const Graph& g, const std::vector<int>& s, const VertexSet& sset, int v,
                       int k, std::uint64_t& work, std::uint64_t work_limit) {
    const int n = g.order();
    std::vector<int> wlist;
    for (int u = 0; u < n; ++u)
        if (u != v && !sset.test(u)) wlist.push_back(u);
    const int wn = static_cast<int>(wlist.size());

    for (unsigned tmask = 0; tmask + 1 < (1u << k); ++tmask) {
        VertexSet tset(n);
        int tsize = 0;
        for (int i = 0; i < k; ++i)
            if (tmask >> i & 1) {
                tset.set(s[i]);
                ++tsize;
            }
        int usize = k - tsize;
        if (usize > wn) continue;

        std::vector<int> uc(usize);
        std::iota(uc.begin(), uc.end(), 0);
        do {
            VertexSet blockers = tset;
            VertexSet uset(n);
            for (int i : uc) {
                blockers.set(wlist[i]);
                uset.set(wlist[i]);
            }
            for (int w : wlist) {
                if (uset.test(w)) continue;
                work += 2;
                if (work > work_limit)
                    throw budget_error("greedy_escape_certificate: work limit exceeded");
                if (!escape_vertex(g, v, blockers, w, EscapeMode::Neighbor)) return false;
                if (!escape_vertex(g, v, blockers, w, EscapeMode::NonNeighbor)) return false;
            }
        } while (usize > 0 && next_combination(uc, wn));
    }
    return true;
}

} // namespace

Certificate greedy_escape_certificate(const Graph& g, int k, std::uint64_t work_limit) {
    const int n = g.order();
    if (k < 1 || k >= n)
        throw std::invalid_argument("greedy_escape_certificate: need 1 <= k < n");
    if (k > 30) throw budget_error("greedy_escape_certificate: k too large to enumerate");

    Certificate cert{CertificateKind::GreedyEscape, k, false, VertexSet(n), -1, 0, 0, 0};
    std::uint64_t work = 0;

    std::vector<int> s(k);
    std::iota(s.begin(), s.end(), 0);
    do {
        VertexSet sset(n);
        for (int u : s) sset.set(u);
        VertexSet ncs = common_non_neighborhood(g, sset);
        for (int v = ncs.first(); v >= 0; v = ncs.next(v)) {
            if (greedy_witness_ok(g, s, sset, v, k, work, work_limit)) {
                cert.verdict = true;
                cert.S = sset;
                cert.v = v;
                return cert;
            }
        }
    } while (next_combination(s, n));
    return cert;
}

int greedy_robber_move(const Graph& g, const GreedyContext& ctx, const std::vector<int>& cops,
                       std::optional<int> current, const std::vector<int>& prev_cops) {
    const int n = g.order();
    if (static_cast<int>(cops.size()) != ctx.k)
        throw std::invalid_argument("greedy_robber_move: cop count differs from k");

    std::vector<int> sorted_cops = cops;
    std::sort(sorted_cops.begin(), sorted_cops.end());

    // The robber pauses whenever the cops did.
    if (current && !prev_cops.empty()) {
        std::vector<int> prev = prev_cops;
        std::sort(prev.begin(), prev.end());
        if (prev == sorted_cops) return *current;
    }

    VertexSet cop_set(n);
    for (int c : sorted_cops) cop_set.set(c);
    VertexSet covered = cop_coverage(g, sorted_cops);

    // Rule (a): all of S occupied, go to v.
    if (ctx.S.subset_of(cop_set)) {
        if (!current || g.closed_neighborhood(*current).test(ctx.v)) return ctx.v;
        // v unreachable; outside the certificate's guarantee. Take any
        // reachable vertex clear of all cops rather than an illegal move.
        VertexSet cand = g.closed_neighborhood(*current);
        cand.subtract(covered);
        int r = cand.first();
        if (r < 0) throw no_safe_move_error("greedy_robber_move: v unreachable, no clear vertex");
        return r;
    }

    VertexSet t = ctx.S & cop_set; // T, the occupied part of S
    VertexSet cand =
        t.empty() ? VertexSet::full(n) : common_non_neighborhood(g, t); // N^c(T)
    if (!cop_set.test(ctx.v)) {
        cand &= g.open_neighborhood(ctx.v); // rule (b): toward a neighbor of v
    } else {
        cand &= g.closed_neighborhood(ctx.v).complement(); // rule (c): N^c(v)
        cand.subtract(ctx.S);
    }
    cand.subtract(covered); // adjacent to no cop
    if (current) cand &= g.closed_neighborhood(*current);

    int r = cand.first();
    if (r < 0) throw no_safe_move_error("greedy_robber_move: no rule yields a destination");
    return r;
}

DangerReport dangerous_vertices(const Graph& g, int k, int q, std::uint64_t work_limit) {
    const int n = g.order();
    if (k < 1 || k >= n) throw std::invalid_argument("dangerous_vertices: need 1 <= k < n");
    if (q < 1) throw std::invalid_argument("dangerous_vertices: need q >= 1");

    DangerReport report;
    report.k = k;
    report.q = q;
    report.delta = delta_k(g, k, work_limit).value;

    std::uint64_t work = 0;
    for (int b = 0; b < n; ++b) {
        // k-subsets of V \ {b}, lexicographic via skip-b relabeling.
        auto vertex = [&](int i) { return i < b ? i : i + 1; };
        std::vector<int> c(k);
        std::iota(c.begin(), c.end(), 0);
        do {
            if (++work > work_limit) throw budget_error("dangerous_vertices: work limit exceeded");
            VertexSet a(n);
            for (int i : c) a.set(vertex(i));
            VertexSet cut = common_non_neighborhood(g, a);
            cut &= g.open_neighborhood(b);
            if (cut.count() <= 2 * q) {
                report.dangerous.emplace(b, a);
                break;
            }
        } while (next_combination(c, n - 1));
    }
    return report;
}

Certificate evasion_certificate(const Graph& g, int k, int q, std::uint64_t work_limit) {
    DangerReport report = dangerous_vertices(g, k, q, work_limit);
    Certificate cert{CertificateKind::Evasion, k, false, VertexSet(g.order()), -1, q,
                     static_cast<int>(report.dangerous.size()), report.delta};
    cert.verdict = cert.dangerous_count < q && report.delta >= q;
    return cert;
}

VertexSet safe_vertices(const Graph& g, const std::vector<int>& cops, const DangerReport& report) {
    VertexSet safe = report.dangerous_set(g.order()).complement();
    safe.subtract(cop_coverage(g, cops));
    return safe;
}

int evasion_robber_move(const Graph& g, const DangerReport& report, const std::vector<int>& cops,
                        std::optional<int> current, const std::vector<int>& prev_cops) {
    VertexSet safe = safe_vertices(g, cops, report);

    if (current && !prev_cops.empty()) {
        std::vector<int> prev = prev_cops, cur = cops;
        std::sort(prev.begin(), prev.end());
        std::sort(cur.begin(), cur.end());
        if (prev == cur && safe.test(*current)) return *current;
    }

    if (current) safe &= g.closed_neighborhood(*current);
    int r = safe.first();
    if (r < 0) throw no_safe_move_error("evasion_robber_move: no safe vertex reachable");
    return r;
}

namespace {

struct GreedyRobber final : RobberController {
    GreedyContext ctx;
    explicit GreedyRobber(GreedyContext c) : ctx(std::move(c)) {}

    int place(const Graph& g, const std::vector<int>& cops) override {
        return greedy_robber_move(g, ctx, cops, std::nullopt);
    }
    int move(const Graph& g, const std::vector<int>& cops, const std::vector<int>& prev_cops,
             int current) override {
        return greedy_robber_move(g, ctx, cops, current, prev_cops);
    }
};

struct EvasionRobber final : RobberController {
    DangerReport report;
    explicit EvasionRobber(DangerReport r) : report(std::move(r)) {}

    int place(const Graph& g, const std::vector<int>& cops) override {
        return evasion_robber_move(g, report, cops, std::nullopt);
    }
    int move(const Graph& g, const std::vector<int>& cops, const std::vector<int>& prev_cops,
             int current) override {
        return evasion_robber_move(g, report, cops, current, prev_cops);
    }
};

} // namespace

std::unique_ptr<RobberController> make_greedy_robber(const Graph& g, const GreedyContext& ctx) {
    if (ctx.S.universe() != g.order())
        throw std::invalid_argument("greedy robber: context built for a different graph order");
    return std::make_unique<GreedyRobber>(ctx);
}

std::unique_ptr<RobberController> make_evasion_robber(const Graph&, DangerReport report) {
    return std::make_unique<EvasionRobber>(std::move(report));
}

} // namespace copwin
