#include <doctest.h>

#include <random>

#include "bandgraph/graph.hpp"

using namespace bandgraph;

TEST_CASE("graph spec parsing") {
    Graph p3 = Graph::from_spec("n=3;edges=1-2,2-3");
    CHECK(p3 == Graph::catalog("A3"));
    CHECK_THROWS(Graph::from_spec("n=2;edges=1-1"));    // self-loop
    CHECK_THROWS(Graph::from_spec("n=2;edges=1-3"));    // out of range
    CHECK_THROWS(Graph::from_spec("n=2;edges=1-2,2-1"));  // duplicate
    CHECK_THROWS(Graph::from_spec("bogus"));
    CHECK(Graph::from_spec("A4") == Graph::catalog("A4"));
}

TEST_CASE("catalog golden edge lists") {
    CHECK(Graph::catalog("A2").serialize() == "n=2;edges=1-2");
    CHECK(Graph::catalog("A4").serialize() == "n=4;edges=1-2,2-3,3-4");
    CHECK(Graph::catalog("C5").serialize() == "n=5;edges=1-2,1-5,2-3,3-4,4-5");
    CHECK(Graph::catalog("G1").serialize() == "n=5;edges=1-2,1-4,2-3,2-5,4-5");
    CHECK(Graph::catalog("G2").serialize() == "n=5;edges=1-2,2-3,3-4,3-5,4-5");
    CHECK(Graph::catalog("G3").serialize() == "n=5;edges=1-2,1-4,2-3,2-4,2-5,3-5");
    CHECK(Graph::catalog("G6").serialize() ==
          "n=6;edges=1-2,1-5,1-6,2-3,2-6,3-4,3-6,4-5,4-6,5-6");

    Graph g6 = Graph::catalog("G6");
    CHECK(g6.edge_count() == 10);
    CHECK(g6.degree_sequence() == std::vector<int>{3, 3, 3, 3, 3, 5});

    Graph c5 = Graph::catalog("C5");
    CHECK(c5.edge_count() == 5);
    CHECK(c5.degree_sequence() == std::vector<int>{2, 2, 2, 2, 2});

    CHECK_THROWS(Graph::catalog("G4"));
    CHECK_THROWS(Graph::catalog("A1"));
    CHECK_THROWS(Graph::catalog("C2"));
}

TEST_CASE("complement") {
    Graph k4(4);
    for (auto [i, j] : k4.pairs()) k4.add_edge(i, j);
    CHECK(k4.complement().edge_count() == 0);
    CHECK(k4.complement().vertex_count() == 4);

    CHECK(Graph::catalog("A4").complement().serialize() == "n=4;edges=1-3,1-4,2-4");

    std::mt19937 rng(7);
    for (int t = 0; t < 50; ++t) {
        int n = std::uniform_int_distribution<int>(1, 8)(rng);
        Graph g(n);
        for (auto [i, j] : g.pairs())
            if (rng() % 2) g.add_edge(i, j);
        Graph cc = g.complement().complement();
        CHECK(cc == g);
        CHECK(g.complement().vertex_count() == n);
        CHECK(g.edge_count() + g.complement().edge_count() == g.pair_count());
    }
    CHECK(Graph::catalog("G3").complement().complement() == Graph::catalog("G3"));
}
