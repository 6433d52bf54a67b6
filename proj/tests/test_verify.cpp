#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "stablereg/generators.hpp"
#include "stablereg/rng.hpp"
#include "stablereg/verify.hpp"

using namespace stablereg;

namespace {

VertexSet range_set(int n, int lo, int hi) {
    VertexSet s(n);
    for (int v = lo; v < hi; ++v) s.set(v);
    return s;
}

}  // namespace

TEST_CASE("pair_uniformity examples") {
    {
        Graph g = union_of_cliques({10, 10});
        UniformityCertificate c =
            pair_uniformity(g, range_set(20, 0, 10), range_set(20, 10, 20), Rational(1, 10));
        CHECK(c.pass);
        CHECK(c.truth == 0);
        CHECK(c.row_exceptions == 0);
    }
    {
        Graph g = complete_multipartite({5, 5});
        UniformityCertificate c =
            pair_uniformity(g, range_set(10, 0, 5), range_set(10, 5, 10), Rational(1, 5));
        CHECK(c.pass);
        CHECK(c.truth == 1);
    }
    {
        Graph g = half_graph(5);
        UniformityCertificate c =
            pair_uniformity(g, range_set(10, 0, 5), range_set(10, 5, 10), Rational(1, 5));
        CHECK(!c.pass);
    }
}

TEST_CASE("zeta reporting") {
    CHECK(zeta_of(Rational(1, 50)) == doctest::Approx(0.2));
    CHECK(zeta_of(Rational(1, 8)) == doctest::Approx(0.5));
}

TEST_CASE("regular_consequence examples") {
    {
        Graph g = union_of_cliques({10, 10});
        VertexSet a = range_set(20, 0, 10), b = range_set(20, 10, 20);
        Rational eps(1, 50);
        UniformityCertificate c = pair_uniformity(g, a, b, eps);
        REQUIRE(c.pass);
        RegularityRecord r = regular_consequence(g, a, b, eps, c);
        CHECK(r.extreme);
        CHECK(r.density == Rational(0));
        CHECK(r.truth == 0);
    }
    {
        Graph g = complete_multipartite({5, 5});
        VertexSet a = range_set(10, 0, 5), b = range_set(10, 5, 10);
        Rational eps(1, 50);
        UniformityCertificate c = pair_uniformity(g, a, b, eps);
        REQUIRE(c.pass);
        RegularityRecord r = regular_consequence(g, a, b, eps, c);
        CHECK(r.extreme);
        CHECK(r.density == Rational(1));
        CHECK(r.truth == 1);
    }
}

TEST_CASE("brute_force_regular examples") {
    {
        Graph g = complete_multipartite({3, 3});
        RegularityOracle r =
            brute_force_regular(g, range_set(6, 0, 3), range_set(6, 3, 6), Rational(1, 5));
        CHECK(r.regular);
        CHECK(r.d_ab == Rational(1));
    }
    {
        Graph g = half_graph(4);
        RegularityOracle r =
            brute_force_regular(g, range_set(8, 0, 4), range_set(8, 4, 8), Rational(1, 4));
        CHECK(!r.regular);
        CHECK(r.d_ab == Rational(6, 16));
        REQUIRE(r.bad_a.has_value());
        // any witness must deviate by >= 1/4 from 6/16
        Rational diff = r.bad_density - r.d_ab;
        if (diff < Rational(0)) diff = Rational(0) - diff;
        CHECK(diff >= Rational(1, 4));
    }
    {
        // frozen oracle value for the smallest half graph
        Graph g = half_graph(2);
        RegularityOracle r =
            brute_force_regular(g, range_set(4, 0, 2), range_set(4, 2, 4), Rational(9, 20));
        CHECK(!r.regular);
        CHECK(r.d_ab == Rational(1, 4));
    }
    CHECK_THROWS(brute_force_regular(Graph(30), range_set(30, 0, 15), range_set(30, 15, 30),
                                     Rational(1, 4)));
}

TEST_CASE("uniformity implies oracle regularity at sqrt(2 eps)") {
    // claim bridge at oracle scale: certified pairs are regular at the
    // recovered parameter
    Rng rng(5);
    int certified = 0;
    for (int trial = 0; trial < 60; ++trial) {
        Graph g = erdos_renyi(24, Rational(1, 10), 100 + trial);
        VertexSet a = range_set(24, 0, 12), b = range_set(24, 12, 24);
        for (Rational eps : {Rational(1, 50), Rational(1, 8)}) {
            UniformityCertificate c = pair_uniformity(g, a, b, eps);
            if (!c.pass) continue;
            ++certified;
            Rational zeta2 = eps * Rational(2);  // zeta = sqrt(2 eps)
            RegularityRecord rec = regular_consequence(g, a, b, eps, c);
            CHECK(rec.extreme);
            // exact check with rational zeta when 2 eps is a square
            if (zeta2 == Rational(1, 25))
                CHECK(brute_force_regular(g, a, b, Rational(1, 5)).regular);
            if (zeta2 == Rational(1, 4))
                CHECK(brute_force_regular(g, a, b, Rational(1, 2)).regular);
        }
    }
    CHECK(certified > 0);
}

TEST_CASE("verify_partition examples") {
    {
        Graph g = union_of_cliques({6, 6, 6});
        std::vector<VertexSet> pieces = {range_set(18, 0, 6), range_set(18, 6, 12),
                                         range_set(18, 12, 18)};
        PartitionCheck c = verify_partition(g, pieces, Rational(1, 5));
        CHECK(c.pass);
        CHECK(c.disjoint);
        CHECK(c.covers);
        CHECK(c.equitable);
        CHECK(c.failing_pairs == 0);
        CHECK(c.pairs.size() == 3);
    }
    {
        // arbitrary equal split of a large half graph fails pairs
        Graph g = half_graph(100);
        std::vector<VertexSet> pieces;
        for (int i = 0; i < 4; ++i) pieces.push_back(range_set(200, i * 50, (i + 1) * 50));
        PartitionCheck c = verify_partition(g, pieces, Rational(1, 10));
        CHECK(!c.pass);
        CHECK(c.failing_pairs > 0);
    }
    {
        Graph g = erdos_renyi(10, Rational(1, 2), 3);
        PartitionCheck c = verify_partition(g, {g.all_vertices()}, Rational(1, 5));
        CHECK(c.pass);
        CHECK(c.pairs.empty());
    }
    {
        // overlap and gaps are flagged
        Graph g = union_of_cliques({4, 4});
        PartitionCheck c =
            verify_partition(g, {range_set(8, 0, 5), range_set(8, 4, 8)}, Rational(1, 5));
        CHECK(!c.disjoint);
        PartitionCheck d = verify_partition(g, {range_set(8, 0, 4)}, Rational(1, 5));
        CHECK(!d.covers);
    }
    {
        // piece bound enforcement
        Graph g = union_of_cliques({4, 4, 4});
        std::vector<VertexSet> pieces = {range_set(12, 0, 4), range_set(12, 4, 8),
                                         range_set(12, 8, 12)};
        PartitionCheck c = verify_partition(g, pieces, Rational(1, 5), Rational(2));
        CHECK(!c.bound_ok);
        CHECK(!c.pass);
    }
}

TEST_CASE("verdict invariant under piece order") {
    Graph g = union_of_cliques({5, 5, 5});
    std::vector<VertexSet> fwd = {range_set(15, 0, 5), range_set(15, 5, 10),
                                  range_set(15, 10, 15)};
    std::vector<VertexSet> rev = {fwd[2], fwd[0], fwd[1]};
    PartitionCheck a = verify_partition(g, fwd, Rational(1, 5));
    PartitionCheck b = verify_partition(g, rev, Rational(1, 5));
    CHECK(a.pass == b.pass);
    REQUIRE(a.pairs.size() == b.pairs.size());
    for (std::size_t i = 0; i < a.pairs.size(); ++i) {
        CHECK(a.pairs[i].i == b.pairs[i].i);
        CHECK(a.pairs[i].j == b.pairs[i].j);
        CHECK(a.pairs[i].density == b.pairs[i].density);
        CHECK(a.pairs[i].uniform == b.pairs[i].uniform);
    }
}
