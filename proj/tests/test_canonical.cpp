#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "wsat/canonical.hpp"
#include "wsat/percolation.hpp"
#include "oracles.hpp"

using namespace wsat;

TEST_CASE("canonical form identifies isomorphic graphs") {
    CHECK(canonical_form(parse_graph_spec("path:3")) ==
          canonical_form(parse_graph_spec("edges:3;1-0,1-2")));
    CHECK(canonical_form(parse_graph_spec("cat:1,2")) !=
          canonical_form(parse_graph_spec("star:5")));
}

TEST_CASE("labeled trees on 4 vertices collapse to two classes") {
    std::set<std::string> classes;
    int labeled = 0;
    oracles::for_each_prufer_tree(4, [&](const Graph& t) {
        ++labeled;
        classes.insert(canonical_form(t));
    });
    CHECK(labeled == 16);  // Cayley: 4^2
    CHECK(classes.size() == 2);
    CHECK(classes.count(canonical_form(path_graph(4))) == 1);
    CHECK(classes.count(canonical_form(star_graph(4))) == 1);
}

TEST_CASE("canonical form is invariant under relabeling") {
    Rng rng(911);
    for (int iter = 0; iter < 1000; ++iter) {
        int n = 2 + int(rng.next(9));
        Graph g(n);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng.next(3) == 0) g.add_edge(u, v);
        std::vector<int> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        for (size_t i = n; i > 1; --i) std::swap(perm[i - 1], perm[rng.next(i)]);
        CHECK(canonical_form(g) == canonical_form(g.relabeled(perm)));
    }
}

TEST_CASE("canonical form separates same-degree-sequence non-isomorphic graphs") {
    // C6 versus two triangles: both 2-regular on 6 vertices
    Graph c6(6);
    for (int i = 0; i < 6; ++i) c6.add_edge(i, (i + 1) % 6);
    Graph tt(6);
    tt.add_edge(0, 1);
    tt.add_edge(1, 2);
    tt.add_edge(0, 2);
    tt.add_edge(3, 4);
    tt.add_edge(4, 5);
    tt.add_edge(3, 5);
    CHECK(canonical_form(c6) != canonical_form(tt));
    // same tree presented two ways
    CHECK(are_isomorphic(parse_graph_spec("edges:6;0-1,1-2,0-3,3-4,0-5"),
                         parse_graph_spec("cat:1,1,1")));
}

TEST_CASE("canonical labeling works through the relabel round trip") {
    Rng rng(5);
    for (int iter = 0; iter < 100; ++iter) {
        int n = 1 + int(rng.next(10));
        Graph g(n);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng.next(4) == 0) g.add_edge(u, v);
        auto perm = canonical_labeling(g);
        Graph canon = g.relabeled(perm);
        CHECK(to_graph6(canon) == canonical_form(g));
    }
}

TEST_CASE("vertex cap is enforced and adjustable") {
    CHECK_THROWS_AS(canonical_form(Graph(17)), std::invalid_argument);
    CHECK_NOTHROW(canonical_form(Graph(17), 20));
}

TEST_CASE("canonical form handles highly symmetric graphs") {
    // perfect matching on 16 vertices: the twin/component machinery must not blow up
    Graph m(16);
    for (int i = 0; i < 8; ++i) m.add_edge(2 * i, 2 * i + 1);
    Graph m2(16);
    for (int i = 0; i < 8; ++i) m2.add_edge(i, 15 - i);
    CHECK(canonical_form(m) == canonical_form(m2));
    CHECK(canonical_form(complete_graph(8), 16) ==
          canonical_form(complete_graph(8).relabeled({7, 6, 5, 4, 3, 2, 1, 0}), 16));
    Graph s(13);
    for (int i = 1; i < 13; ++i) s.add_edge(0, i);
    CHECK(canonical_form(s) == canonical_form(s.relabeled({12, 0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11})));
}
