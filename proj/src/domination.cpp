#include "copwin/domination.hpp"

#include <numeric>

#include "copwin/errors.hpp"

namespace copwin {

Neighborhoods neighborhoods(const Graph& g, int v) {
    Neighborhoods r{g.open_neighborhood(v), g.closed_neighborhood(v), {}};
    r.non = r.closed.complement();
    return r;
}

VertexSet common_non_neighborhood(const Graph& g, const VertexSet& s) {
    if (s.empty()) throw std::invalid_argument("common_non_neighborhood: empty set");
    VertexSet covered(g.order());
    for (int u = s.first(); u >= 0; u = s.next(u)) covered |= g.closed_neighborhood(u);
    return covered.complement();
}

bool is_dominating_set(const Graph& g, const VertexSet& s) {
    if (s.empty()) return false; // no graph here is empty, so nothing dominates
    return common_non_neighborhood(g, s).empty();
}

namespace {

// Advances a sorted k-subset of {0..n-1} to its lexicographic successor.
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

} // namespace

DeltaResult delta_k(const Graph& g, int k, std::uint64_t work_limit) {
    int n = g.order();
    if (k < 1 || k > n) throw std::invalid_argument("delta_k: k out of range");

    std::vector<int> combo(k);
    std::iota(combo.begin(), combo.end(), 0);
    DeltaResult best{n + 1, VertexSet(n)};
    std::uint64_t work = 0;
    do {
        if (++work > work_limit) throw budget_error("delta_k: work limit exceeded");
        VertexSet covered(n);
        for (int u : combo) covered |= g.closed_neighborhood(u);
        int missed = n - covered.count();
        if (missed < best.value) {
            best.value = missed;
            best.witness = VertexSet(n);
            for (int u : combo) best.witness.set(u);
            if (missed == 0) break;
        }
    } while (next_combination(combo, n));
    return best;
}

std::vector<std::pair<int, int>> corners(const Graph& g) {
    int n = g.order();
    std::vector<std::pair<int, int>> r;
    for (int u = 0; u < n; ++u) {
        for (int w = 0; w < n; ++w) {
            if (w == u) continue;
            if (g.closed_neighborhood(u).subset_of(g.closed_neighborhood(w))) {
                r.emplace_back(u, w);
                break;
            }
        }
    }
    return r;
}

DismantlingResult dismantling_order(const Graph& g) {
    DismantlingResult res{false, {}};
    Graph h = g;
    std::vector<int> label(g.order()); // current index -> original label
    std::iota(label.begin(), label.end(), 0);

    while (h.order() > 1) {
        auto cs = corners(h);
        if (cs.empty()) return res;
        auto [u, w] = cs.front(); // lowest-index corner
        res.order.emplace_back(label[u], label[w]);
        label.erase(label.begin() + u);
        h = h.delete_vertex(u);
    }
    res.success = true;
    return res;
}

std::optional<int> has_universal_vertex(const Graph& g) {
    for (int v = 0; v < g.order(); ++v)
        if (g.degree(v) == g.order() - 1) return v;
    return std::nullopt;
}

} // namespace copwin
