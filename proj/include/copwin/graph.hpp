#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "copwin/vertex_set.hpp"

namespace copwin {

// Simple undirected graph on vertices 0..n-1. Adjacency is stored open
// (no loops); game rules treat vertices as reflexive via closed rows,
// which are kept alongside to speed up move generation.
class Graph {
public:
    explicit Graph(int n) : n_(check_n(n)), open_(n, VertexSet(n)), closed_(n, VertexSet(n)) {
        for (int v = 0; v < n; ++v) closed_[v].set(v);
    }

    int order() const { return n_; }

    void add_edge(int u, int v) {
        check(u);
        check(v);
        if (u == v) throw std::invalid_argument("Graph: loop rejected");
        open_[u].set(v);
        open_[v].set(u);
        closed_[u].set(v);
        closed_[v].set(u);
    }

    bool adjacent(int u, int v) const {
        check(u);
        return open_[u].test(v);
    }

    const VertexSet& open_neighborhood(int v) const {
        check(v);
        return open_[v];
    }

    const VertexSet& closed_neighborhood(int v) const {
        check(v);
        return closed_[v];
    }

    int degree(int v) const { return open_neighborhood(v).count(); }

    std::size_t edge_count() const {
        std::size_t d = 0;
        for (int v = 0; v < n_; ++v) d += static_cast<std::size_t>(degree(v));
        return d / 2;
    }

    // Copy with u removed; vertices above u shift down by one.
    Graph delete_vertex(int u) const {
        check(u);
        if (n_ == 1) throw std::invalid_argument("Graph: cannot delete the last vertex");
        Graph h(n_ - 1);
        for (int a = 0; a < n_; ++a) {
            if (a == u) continue;
            for (int b = open_[a].next(a); b >= 0; b = open_[a].next(b)) {
                if (b == u) continue;
                h.add_edge(a - (a > u), b - (b > u));
            }
        }
        return h;
    }

    bool operator==(const Graph& o) const { return n_ == o.n_ && open_ == o.open_; }

private:
    int n_;
    std::vector<VertexSet> open_, closed_;

    static int check_n(int n) {
        if (n < 1) throw std::invalid_argument("Graph: order must be positive");
        return n;
    }

    void check(int v) const {
        if (v < 0 || v >= n_) throw std::invalid_argument("Graph: vertex out of range");
    }
};

// Standard small constructions used throughout the tests and the CLI.
Graph complete_graph(int n);
Graph cycle_graph(int n);
Graph path_graph(int n);
Graph empty_graph(int n);
Graph star_graph(int leaves);
Graph petersen_graph();

} // namespace copwin
