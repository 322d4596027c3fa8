#include <doctest.h>

#include <stdexcept>

#include "copwin/domination.hpp"
#include "copwin/errors.hpp"

using namespace copwin;

TEST_CASE("neighborhoods on a seven cycle") {
    Graph g = cycle_graph(7);
    Neighborhoods nb = neighborhoods(g, 0);
    CHECK(nb.open.to_vector() == std::vector<int>{1, 6});
    CHECK(nb.closed.to_vector() == std::vector<int>{0, 1, 6});
    CHECK(nb.non.to_vector() == std::vector<int>{2, 3, 4, 5});

    CHECK(common_non_neighborhood(g, VertexSet(7, {0, 3})).to_vector() == std::vector<int>{5});
    CHECK(common_non_neighborhood(g, VertexSet(7, {0})) == nb.non);
    CHECK_THROWS_AS(common_non_neighborhood(g, VertexSet(7)), std::invalid_argument);
}

TEST_CASE("dominating sets") {
    Graph c4 = cycle_graph(4);
    CHECK(is_dominating_set(c4, VertexSet(4, {0, 1})));
    CHECK(is_dominating_set(c4, VertexSet(4, {0, 2})));
    CHECK_FALSE(is_dominating_set(c4, VertexSet(4, {0})));
    CHECK(is_dominating_set(star_graph(4), VertexSet(5, {0})));
    CHECK_FALSE(is_dominating_set(c4, VertexSet(4)));
}

TEST_CASE("delta_k values and witnesses") {
    Graph c7 = cycle_graph(7);

    DeltaResult d1 = delta_k(c7, 1);
    CHECK(d1.value == 4);
    CHECK(d1.witness.to_vector() == std::vector<int>{0});

    DeltaResult d2 = delta_k(c7, 2);
    CHECK(d2.value == 1);
    CHECK(d2.witness.to_vector() == std::vector<int>{0, 3});

    CHECK(delta_k(c7, 3).value == 0);
    CHECK(delta_k(complete_graph(3), 1).value == 0);
    CHECK(delta_k(cycle_graph(4), 1).value == 1);
    CHECK(delta_k(cycle_graph(4), 2).value == 0);
    CHECK(delta_k(star_graph(6), 1).value == 0);
    CHECK(delta_k(star_graph(6), 1).witness.to_vector() == std::vector<int>{0});

    CHECK_THROWS_AS(delta_k(c7, 0), std::invalid_argument);
    CHECK_THROWS_AS(delta_k(c7, 8), std::invalid_argument);
    CHECK_THROWS_AS(delta_k(cycle_graph(30), 10, 50), budget_error);
}

TEST_CASE("corners") {
    auto k4 = corners(complete_graph(4));
    REQUIRE(k4.size() == 4);
    CHECK(k4[0] == std::pair{0, 1});
    CHECK(k4[1] == std::pair{1, 0});
    CHECK(k4[2] == std::pair{2, 0});
    CHECK(k4[3] == std::pair{3, 0});

    auto p3 = corners(path_graph(3));
    REQUIRE(p3.size() == 2);
    CHECK(p3[0] == std::pair{0, 1});
    CHECK(p3[1] == std::pair{2, 1});

    CHECK(corners(cycle_graph(4)).empty());
    CHECK(corners(cycle_graph(5)).empty());
    CHECK(corners(petersen_graph()).empty());

    // an isolated vertex is never a corner: u lies in N[u] but not in N[v]
    Graph g(3);
    g.add_edge(0, 1);
    auto c = corners(g);
    REQUIRE(c.size() == 2);
    CHECK(c[0] == std::pair{0, 1});
    CHECK(c[1] == std::pair{1, 0});
}

TEST_CASE("dismantling") {
    DismantlingResult p3 = dismantling_order(path_graph(3));
    CHECK(p3.success);
    REQUIRE(p3.order.size() == 2);
    CHECK(p3.order[0] == std::pair{0, 1});
    CHECK(p3.order[1] == std::pair{1, 2});

    CHECK(dismantling_order(complete_graph(6)).success);
    CHECK(dismantling_order(path_graph(7)).success);
    CHECK(dismantling_order(star_graph(5)).success);
    CHECK(dismantling_order(complete_graph(1)).success);
    CHECK(dismantling_order(complete_graph(1)).order.empty());

    DismantlingResult c4 = dismantling_order(cycle_graph(4));
    CHECK_FALSE(c4.success);
    CHECK(c4.order.empty());
    CHECK_FALSE(dismantling_order(cycle_graph(7)).success);
    CHECK_FALSE(dismantling_order(petersen_graph()).success);
}

TEST_CASE("universal vertices") {
    CHECK(has_universal_vertex(star_graph(3)) == 0);
    CHECK(has_universal_vertex(complete_graph(5)) == 0);
    CHECK(has_universal_vertex(complete_graph(1)) == 0);
    CHECK_FALSE(has_universal_vertex(cycle_graph(4)).has_value());
    CHECK_FALSE(has_universal_vertex(empty_graph(2)).has_value());

    Graph g(4); // universal vertex with a higher index
    g.add_edge(3, 0);
    g.add_edge(3, 1);
    g.add_edge(3, 2);
    CHECK(has_universal_vertex(g) == 3);
}
