#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "errors.hpp"
#include "graph.hpp"

using namespace paley;

TEST_CASE("G_13 adjacency structure") {
    Graph g(check_admissible(13));
    CHECK(g.order() == 13);
    CHECK(g.degree() == 6);
    CHECK(g.rows_cached());

    for (uint64_t d : {1u, 3u, 4u, 9u, 10u, 12u}) CHECK(g.adjacent(0, d));
    for (uint64_t d : {2u, 5u, 6u, 7u, 8u, 11u}) CHECK_FALSE(g.adjacent(0, d));

    bool symmetric = true, irreflexive = true, circulant = true;
    for (uint64_t u = 0; u < 13; ++u) {
        irreflexive = irreflexive && !g.adjacent(u, u);
        for (uint64_t v = 0; v < 13; ++v) {
            symmetric = symmetric && g.adjacent(u, v) == g.adjacent(v, u);
            circulant = circulant && g.adjacent(u, v) == g.adjacent((u + 1) % 13, (v + 1) % 13);
        }
    }
    CHECK(symmetric);
    CHECK(irreflexive);
    CHECK(circulant);
}

TEST_CASE("rows: cache and rotation agree") {
    auto m = check_admissible(169);
    Graph cached(m);
    Graph uncached(m, 1);  // row_cache_limit below n forces the rotation path
    CHECK(cached.rows_cached());
    CHECK_FALSE(uncached.rows_cached());

    Bitset scratch;
    for (uint64_t x : {0u, 1u, 13u, 100u, 168u}) {
        CAPTURE(x);
        CHECK(cached.row(x) == uncached.row(x));
        CHECK(uncached.row_ref(x, scratch) == cached.row(x));
        CHECK(cached.row(x) == cached.diff_set().rotated(x));
        CHECK(uncached.row(x).count() == uncached.degree());
    }
    // row x holds exactly the neighbors of x
    const Bitset r = cached.row(37);
    for (uint64_t v = 0; v < 169; ++v) CHECK(r.test(v) == cached.adjacent(37, v));
}

TEST_CASE("degree is phi over 2^k") {
    for (uint64_t n : {13u, 65u, 85u, 221u, 1073u, 2873u, 10u, 26u}) {
        auto m = check_admissible(n);
        Graph g(m);
        CAPTURE(n);
        CHECK(g.degree() == m.phi >> m.k());
        CHECK(g.degree() == g.diff_set().count());
    }
}

TEST_CASE("even modulus: odd residues only") {
    Graph g(check_admissible(10));
    CHECK(g.degree() == 2);  // R_10 = {1, 9}
    CHECK(g.adjacent(0, 1));
    CHECK(g.adjacent(0, 9));
    CHECK_FALSE(g.adjacent(0, 2));
    CHECK_FALSE(g.adjacent(0, 5));
    // connection set is odd throughout
    g.diff_set().for_each([](uint64_t x) { CHECK(x % 2 == 1); });
    CHECK_THROWS_AS(InducedSubgraph{g}, InvalidInput);
}

TEST_CASE("induced subgraph H_n") {
    Graph g(check_admissible(13));
    InducedSubgraph h(g);
    CHECK(&h.parent() == &g);
    CHECK(h.vertex_count() == 6);
    CHECK(h.vertices() == g.diff_set());

    // neighbors of 1 inside R_13 = {1,3,4,9,10,12}: shift R by 1, intersect
    Bitset nb = h.neighbors(1);
    CHECK(nb.count() == 2);
    CHECK(nb.test(4));
    CHECK(nb.test(10));
    // always a subset of both the vertex set and the parent row
    Bitset row1 = g.row(1);
    nb.for_each([&](uint64_t x) {
        CHECK(h.vertices().test(x));
        CHECK(row1.test(x));
    });
}

TEST_CASE("edge list output") {
    std::ostringstream os;
    write_edge_list(Graph(check_admissible(5)), os);
    CHECK(os.str() == "0 1\n0 4\n1 2\n2 3\n3 4\n");  // G_5 is the 5-cycle

    std::ostringstream os13;
    write_edge_list(Graph(check_admissible(13)), os13);
    uint64_t lines = 0;
    for (char c : os13.str())
        if (c == '\n') ++lines;
    CHECK(lines == 13 * 6 / 2);
}
