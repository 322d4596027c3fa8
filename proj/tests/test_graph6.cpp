#include <doctest.h>

#include <stdexcept>
#include <string>

#include "copwin/graph6.hpp"

using namespace copwin;

TEST_CASE("graph6 decodes the classics") {
    Graph k1 = graph6_decode("@");
    CHECK(k1.order() == 1);
    CHECK(k1.edge_count() == 0);

    Graph k3 = graph6_decode("Bw");
    CHECK(k3.order() == 3);
    CHECK(k3.edge_count() == 3);

    Graph p3 = graph6_decode("Bg");
    CHECK(p3.order() == 3);
    CHECK(p3.edge_count() == 2);
    CHECK(p3.adjacent(0, 1));
    CHECK(p3.adjacent(1, 2));
    CHECK_FALSE(p3.adjacent(0, 2));

    Graph c4 = graph6_decode("Cl");
    CHECK(c4.order() == 4);
    CHECK(c4.edge_count() == 4);
    CHECK(c4.adjacent(0, 1));
    CHECK(c4.adjacent(1, 2));
    CHECK(c4.adjacent(2, 3));
    CHECK(c4.adjacent(0, 3));
    CHECK_FALSE(c4.adjacent(0, 2));

    CHECK(graph6_decode("C~") == complete_graph(4));
    CHECK(graph6_decode("Dhc") == cycle_graph(5));
    CHECK(graph6_decode("FhCKG") == cycle_graph(7));
    CHECK(graph6_decode("Cs") == star_graph(3));
    CHECK(graph6_decode("IheA@GUAo") == petersen_graph());
    CHECK(graph6_decode("L" + std::string(13, '~')) == complete_graph(13));
}

TEST_CASE("graph6 encodes back") {
    CHECK(graph6_encode(complete_graph(1)) == "@");
    CHECK(graph6_encode(complete_graph(3)) == "Bw");
    CHECK(graph6_encode(path_graph(3)) == "Bg");
    CHECK(graph6_encode(cycle_graph(4)) == "Cl");
    CHECK(graph6_encode(cycle_graph(5)) == "Dhc");
    CHECK(graph6_encode(cycle_graph(7)) == "FhCKG");
    CHECK(graph6_encode(star_graph(3)) == "Cs");
    CHECK(graph6_encode(petersen_graph()) == "IheA@GUAo");
    CHECK(graph6_encode(complete_graph(13)) == "L" + std::string(13, '~'));

    for (int n = 1; n <= 62; n += 9) {
        Graph g(n);
        for (int v = 2; v < n; v += 3) g.add_edge(v - 2, v);
        CHECK(graph6_decode(graph6_encode(g)) == g);
    }
}

TEST_CASE("graph6 input tolerance and errors") {
    CHECK(graph6_decode(">>graph6<<Bw") == complete_graph(3));
    CHECK(graph6_decode("Bw\n") == complete_graph(3));

    CHECK_THROWS_AS(graph6_decode(""), std::invalid_argument);
    CHECK_THROWS_AS(graph6_decode("B"), std::invalid_argument);    // payload too short
    CHECK_THROWS_AS(graph6_decode("Bww"), std::invalid_argument);  // payload too long
    CHECK_THROWS_AS(graph6_decode("B\x1f"), std::invalid_argument); // byte below 63
    CHECK_THROWS_AS(graph6_decode("~~~"), std::invalid_argument);  // long form, n > 62

    CHECK_THROWS_WITH_AS(graph6_decode("~~~"), doctest::Contains("62"), std::invalid_argument);
}
