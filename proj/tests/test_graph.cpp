#include <catch2/catch_amalgamated.hpp>

#include "wsat/graph.hpp"
#include "wsat/percolation.hpp"

using namespace wsat;

TEST_CASE("graph basics and invariants") {
    Graph g(5);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    CHECK(g.edge_count() == 2);
    CHECK(g.has_edge(1, 0));
    CHECK(g.has_edge(2, 1));
    CHECK_FALSE(g.has_edge(0, 2));
    CHECK_THROWS_AS(g.add_edge(3, 3), std::invalid_argument);
    CHECK_THROWS_AS(g.add_edge(0, 9), std::out_of_range);
    g.add_edge(0, 1);  // duplicate is a no-op
    CHECK(g.edge_count() == 2);
    CHECK(g.degree(1) == 2);
    g.remove_edge(0, 1);
    CHECK(g.edge_count() == 1);
}

TEST_CASE("parse_graph_spec families") {
    SECTION("path:4 has edges 01,12,23") {
        Graph g = parse_graph_spec("path:4");
        REQUIRE(g.order() == 4);
        CHECK(g.edges() == std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}});
    }
    SECTION("cat:2,2 degree multiset") {
        Graph g = parse_graph_spec("cat:2,2");
        REQUIRE(g.order() == 6);
        auto d = g.degrees();
        std::sort(d.begin(), d.end());
        CHECK(d == std::vector<int>{1, 1, 1, 1, 3, 3});
    }
    SECTION("the seven-vertex edges form") {
        Graph g = parse_graph_spec("edges:7;0-1,0-2,1-3,1-4,2-5,2-6");
        REQUIRE(g.order() == 7);
        auto d = g.degrees();
        std::sort(d.begin(), d.end());
        CHECK(d == std::vector<int>{1, 1, 1, 1, 2, 3, 3});
        CHECK(g.is_tree());
    }
    SECTION("spine and pendant numbering of caterpillars") {
        Graph g = parse_graph_spec("cat:1,2");
        // spine 0-1, pendant 2 on vertex 0, pendants 3,4 on vertex 1
        CHECK(g.has_edge(0, 1));
        CHECK(g.has_edge(0, 2));
        CHECK(g.has_edge(1, 3));
        CHECK(g.has_edge(1, 4));
    }
    SECTION("malformed specs") {
        CHECK_THROWS_AS(parse_graph_spec("nope"), std::invalid_argument);
        CHECK_THROWS_AS(parse_graph_spec("path:x"), std::invalid_argument);
        CHECK_THROWS_AS(parse_graph_spec("edges:3;0-5"), std::invalid_argument);
        CHECK_THROWS_AS(parse_graph_spec("edges:3;0-0"), std::invalid_argument);
        CHECK_THROWS_AS(parse_graph_spec("edges:3;0-1,0-1"), std::invalid_argument);
        CHECK_THROWS_AS(parse_graph_spec("cat:1,-2"), std::invalid_argument);
    }
}

TEST_CASE("graph6 reference vectors") {
    // frozen from the standard tooling for this format
    CHECK(to_graph6(path_graph(4)) == "Ch");
    CHECK(to_graph6(star_graph(5)) == "Ds_");
    CHECK(to_graph6(complete_graph(5)) == "D~{");
    Graph r9 = Graph::from_edges(9, {{0, 2}, {0, 3}, {0, 5}, {0, 8}, {1, 4}, {1, 5},
                                     {2, 3}, {2, 4}, {2, 5}, {3, 5}, {3, 7}, {3, 8},
                                     {4, 8}, {5, 6}, {5, 7}, {5, 8}, {6, 8}});
    CHECK(to_graph6(r9) == "HTZoGi]");
    Graph r13 = Graph::from_edges(
        13, {{0, 1}, {0, 5}, {0, 6},  {0, 7},  {0, 8},  {0, 10}, {0, 12}, {1, 2},
             {1, 6}, {1, 7}, {1, 8},  {2, 6},  {2, 12}, {3, 5},  {3, 6},  {4, 5},
             {4, 8}, {4, 9}, {4, 11}, {5, 7},  {5, 8},  {5, 10}, {5, 11}, {5, 12},
             {6, 7}, {6, 8}, {6, 11}, {7, 9},  {7, 10}, {8, 10}, {9, 12}, {10, 12}});
    CHECK(to_graph6(r13) == "LgA^eNMASJ@ohE");
    // long-form vertex count
    Graph p70 = path_graph(70);
    CHECK(from_graph6(to_graph6(p70)) == p70);
    CHECK(to_graph6(p70).substr(0, 4) == std::string("~?@E").substr(0, 4));
}

TEST_CASE("graph6 round trip on random graphs") {
    Rng rng(20240811);
    for (int iter = 0; iter < 300; ++iter) {
        int n = int(rng.next(41));
        Graph g(n);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng.next(3) == 0) g.add_edge(u, v);
        Graph back = from_graph6(to_graph6(g));
        REQUIRE(back == g);
    }
}

TEST_CASE("graph6 reader rejects malformed input") {
    CHECK_THROWS_AS(from_graph6(""), std::invalid_argument);
    CHECK_THROWS_AS(from_graph6("C"), std::invalid_argument);        // truncated bits
    CHECK_THROWS_AS(from_graph6("Chh"), std::invalid_argument);      // trailing bytes
    CHECK_THROWS_AS(from_graph6(std::string(1, char(20))), std::invalid_argument);
    CHECK_THROWS_AS(from_graph6("B`"), std::invalid_argument);       // nonzero padding
}

TEST_CASE("dot export") {
    std::string dot = to_dot(path_graph(3));
    CHECK(dot.find("graph G {") == 0);
    CHECK(dot.find("0 -- 1;") != std::string::npos);
    CHECK(dot.find("1 -- 2;") != std::string::npos);
}

TEST_CASE("bfs, diameter, trees") {
    Graph g = parse_graph_spec("cat:2,2");
    CHECK(g.is_tree());
    CHECK(g.diameter() == 3);
    CHECK(path_graph(5).diameter() == 4);
    Graph two(4);
    two.add_edge(0, 1);
    two.add_edge(2, 3);
    CHECK_FALSE(two.is_connected());
    CHECK_FALSE(two.is_tree());
    CHECK_THROWS_AS(two.diameter(), std::invalid_argument);
}
