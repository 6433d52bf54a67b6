#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "stablereg/generators.hpp"
#include "stablereg/witness.hpp"

using namespace stablereg;

namespace {

bool symmetric_irreflexive(const Graph& g) {
    for (int u = 0; u < g.vertex_count(); ++u) {
        if (g.adjacent(u, u)) return false;
        for (int v = u + 1; v < g.vertex_count(); ++v)
            if (g.adjacent(u, v) != g.adjacent(v, u)) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("half_graph shape") {
    CHECK(half_graph(1).vertex_count() == 2);
    CHECK(half_graph(1).edge_count() == 0);

    Graph g2 = half_graph(2);
    CHECK(g2.edge_count() == 1);
    CHECK(g2.adjacent(0, 3));  // a_1 b_2 is the only i<j pair

    CHECK(half_graph(5).edge_count() == 10);
    CHECK_THROWS(half_graph(0));
}

TEST_CASE("union_of_cliques shape") {
    Graph k3 = union_of_cliques({3});
    CHECK(k3.edge_count() == 3);

    Graph g = union_of_cliques({3, 3, 3});
    CHECK(g.vertex_count() == 9);
    CHECK(g.edge_count() == 9);
    CHECK(!g.adjacent(0, 3));

    CHECK(union_of_cliques({1, 1}).edge_count() == 0);
    CHECK_THROWS(union_of_cliques({}));
}

TEST_CASE("complete_multipartite shape") {
    CHECK(complete_multipartite({3, 3}).edge_count() == 9);
    CHECK(complete_multipartite({1, 1, 1}).edge_count() == 3);
    CHECK(complete_multipartite({2, 2, 2}).edge_count() == 12);
    CHECK_THROWS(complete_multipartite({}));
}

TEST_CASE("erdos_renyi extremes and determinism") {
    CHECK(erdos_renyi(5, Rational(0), 1).edge_count() == 0);
    CHECK(erdos_renyi(5, Rational(1), 1).edge_count() == 10);

    Graph a = erdos_renyi(100, Rational(1, 2), 7);
    Graph b = erdos_renyi(100, Rational(1, 2), 7);
    for (int u = 0; u < 100; ++u)
        for (int v = 0; v < 100; ++v)
            CHECK(a.adjacent(u, v) == b.adjacent(u, v));
    CHECK(symmetric_irreflexive(a));
}

TEST_CASE("special_tree_example constraints") {
    // vertices b_e=0, b_0=1, b_1=2, a_00=3, a_01=4, a_10=5, a_11=6
    Graph g = special_tree_example();
    CHECK(g.vertex_count() == 7);
    CHECK(g.edge_count() == 4);
    CHECK(g.adjacent(0, 6));   // R(b_e, a_11)
    CHECK(g.adjacent(0, 5));   // R(b_e, a_10)
    CHECK(g.adjacent(2, 6));   // R(b_1, a_11)
    CHECK(g.adjacent(1, 4));   // R(b_0, a_01)
    CHECK(!g.adjacent(0, 3));  // not R(b_e, a_00)
    CHECK(!g.adjacent(0, 4));  // not R(b_e, a_01)
    CHECK(!g.adjacent(2, 5));  // not R(b_1, a_10)
    CHECK(!g.adjacent(1, 3));  // not R(b_0, a_00)
}

TEST_CASE("planted_half_graph rewires only the constrained pairs") {
    {
        auto p = planted_half_graph(Graph(6), 3, 1);
        CHECK(p.graph.edge_count() == 3);
        CHECK(verify_half_graph(p.graph, HalfGraphWitness{p.a_side, p.b_side}, 3));
    }
    {
        // K_6 minus the pattern's non-edges: of the 4 constrained pairs,
        // (a_1,b_2) stays an edge and the other 3 are removed.
        Graph k6 = complete_multipartite({1, 1, 1, 1, 1, 1});
        auto p = planted_half_graph(k6, 2, 1);
        CHECK(p.graph.edge_count() == 15 - 3);
        CHECK(verify_half_graph(p.graph, HalfGraphWitness{p.a_side, p.b_side}, 2));
    }
    {
        auto p1 = planted_half_graph(erdos_renyi(20, Rational(1, 2), 5), 3, 9);
        auto p2 = planted_half_graph(erdos_renyi(20, Rational(1, 2), 5), 3, 9);
        CHECK(p1.a_side == p2.a_side);
        CHECK(p1.b_side == p2.b_side);
        for (int u = 0; u < 20; ++u)
            for (int v = 0; v < 20; ++v)
                CHECK(p1.graph.adjacent(u, v) == p2.graph.adjacent(u, v));
    }
    CHECK_THROWS(planted_half_graph(Graph(3), 2, 0));
}

TEST_CASE("all generators produce symmetric irreflexive graphs") {
    CHECK(symmetric_irreflexive(half_graph(4)));
    CHECK(symmetric_irreflexive(union_of_cliques({3, 4, 5})));
    CHECK(symmetric_irreflexive(complete_multipartite({2, 3, 4})));
    CHECK(symmetric_irreflexive(erdos_renyi(50, Rational(1, 3), 2)));
    CHECK(symmetric_irreflexive(special_tree_example()));
    CHECK(symmetric_irreflexive(planted_half_graph(erdos_renyi(30, Rational(1, 2), 1), 4, 2).graph));
}

TEST_CASE("half graph lengths of clique unions") {
    // >= 3 parts: length 2 present, length 3 absent; 2 parts: no length 2
    Graph g3 = union_of_cliques({3, 3, 3});
    CHECK(find_half_graph(g3, 2).outcome == Outcome::Found);
    CHECK(find_half_graph(g3, 3).outcome == Outcome::CertifiedAbsent);

    Graph g2 = union_of_cliques({3, 3});
    CHECK(find_half_graph(g2, 2).outcome == Outcome::CertifiedAbsent);
}

TEST_CASE("half_graph detector confirms max length") {
    for (int k = 1; k <= 6; ++k) {
        MaxHalfGraphResult r = max_half_graph_length(half_graph(k), k + 1);
        CHECK(r.max_length == k);
    }
}
