#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "stablereg/generators.hpp"
#include "stablereg/partition.hpp"

using namespace stablereg;

namespace {

PipelineParams clique_params_740() {
    // manual params for unit-scale cover/refine tests; n too small for the
    // Step 4(i) gate that make_params enforces
    PipelineParams p;
    p.n = 740;
    p.eps = Rational(1, 5);
    p.t = 2;
    p.alpha = Rational(1, 20);
    p.beta = Rational(1, 15);
    p.q = 20;
    p.c = 37;
    p.sizes = {740, 37};
    return p;
}

}  // namespace

TEST_CASE("size_sequence arithmetic") {
    {
        SizeSequence s = size_sequence(30000, Rational(1, 5), 2);
        CHECK(s.q == 20);
        CHECK(s.c == 37);
        CHECK(s.sizes == std::vector<long long>{740, 37});
    }
    {
        // arithmetic only: eps = 1/5 is inadmissible at t = 3, but the
        // constants are still well defined
        SizeSequence s = size_sequence(1000000, Rational(1, 5), 3);
        CHECK(s.q == 20);
        CHECK(s.c == 62);
        CHECK(s.sizes == std::vector<long long>{24800, 1240, 62});
    }
}

TEST_CASE("make_params examples") {
    {
        PipelineParams p = make_params(30000, Rational(1, 5), 2);
        CHECK(p.alpha == Rational(1, 20));
        CHECK(p.beta == Rational(1, 15));
        CHECK(p.q == 20);
        CHECK(p.c == 37);
        CHECK(p.sizes == std::vector<long long>{740, 37});
    }
    CHECK_THROWS_WITH(make_params(1000000, Rational(1, 5), 3), "epsilon too large for tree bound");
    CHECK_THROWS_WITH(make_params(1000, Rational(1, 5), 2), "insufficient n for Step 4(i)");
}

TEST_CASE("size sequence invariants") {
    struct Case { long long n; Rational eps; int t; };
    const Case cases[] = {
        {30000, Rational(1, 5), 2},
        {2000000, Rational(1, 10), 3},
        {50000, Rational(6, 25), 2},
        {3000000, Rational(1, 10), 3},
    };
    for (const Case& cs : cases) {
        PipelineParams p = make_params(cs.n, cs.eps, cs.t);
        // q within [1/alpha, 2/alpha]
        CHECK(Rational(p.q) >= Rational(1) / p.alpha);
        CHECK(Rational(p.q) <= Rational(2) / p.alpha);
        // q^{t-1} c in (alpha n / 2 - q^{t-1}, alpha n / 2]
        Rational lead(p.sizes[0]);
        Rational half = p.alpha * Rational(p.n) / Rational(2);
        Rational qpow(1);
        for (int i = 0; i < p.t - 1; ++i) qpow = qpow * Rational(p.q);
        CHECK(lead <= half);
        CHECK(lead > half - qpow);
        for (std::size_t l = 0; l + 1 < p.sizes.size(); ++l) {
            CHECK(p.sizes[l] == p.sizes[l + 1] * p.q);
            CHECK(p.sizes[l] % p.sizes.back() == 0);
            CHECK(Rational(p.sizes[l + 1]) <= cs.eps * Rational(p.sizes[l]));
        }
        CHECK(p.sizes.back() > p.t);
    }
}

TEST_CASE("theorem_bound examples") {
    {
        TheoremBound b = theorem_bound(Rational(1, 5), 2);
        CHECK(b.exact == Rational(1600));
        CHECK(b.nominal == Rational(4));
    }
    {
        TheoremBound b = theorem_bound(Rational(1, 10), 3);
        CHECK(b.nominal == Rational(320));
        CHECK(b.exact == Rational(256000));
    }
    {
        TheoremBound b = theorem_bound(Rational(1, 32), 4);
        CHECK(b.nominal == Rational(262144));
    }
}

TEST_CASE("extract_excellent on a clique") {
    // one clique of size 1000; no witness splits it at alpha, so extraction
    // returns a depth-0 subset of leading size
    Graph g = union_of_cliques(std::vector<int>(30, 1000));
    PipelineParams p = make_params(30000, Rational(1, 5), 2);
    VertexSet a(30000);
    for (int v = 0; v < 1000; ++v) a.set(v);
    ExtractResult r = extract_excellent(g, a, p, default_family(), 1);
    CHECK(r.piece.count() == 740);
    CHECK(r.depth == 0);
    CHECK(is_subset(r.piece, a));
}

TEST_CASE("extract_excellent splits mixed sets") {
    // two half cliques force one split before a pure piece emerges
    Graph g = union_of_cliques(std::vector<int>(30, 1000));
    PipelineParams p = make_params(30000, Rational(1, 5), 2);
    VertexSet a(30000);
    for (int v = 0; v < 400; ++v) a.set(v);
    for (int v = 1000; v < 1400; ++v) a.set(v);
    ExtractResult r = extract_excellent(g, a, p, default_family(), 1);
    CHECK(r.piece.count() == 37);
    CHECK(r.depth >= 1);
    CHECK(!r.provenance.empty());
}

TEST_CASE("extract_excellent_exact size law at oracle scale") {
    // admissibility eps < 1/2^t pins oracle-scale runs to t = 1, where the
    // law demands A itself be excellent
    {
        Graph g(8);
        VertexSet piece = extract_excellent_exact(g, g.all_vertices(), Rational(2, 5), 1);
        CHECK(piece == g.all_vertices());
    }
    {
        Graph g = union_of_cliques({4, 4});
        VertexSet a(8);
        for (int v = 0; v < 4; ++v) a.set(v);
        VertexSet piece = extract_excellent_exact(g, a, Rational(3, 10), 1);
        CHECK(piece == a);
        CHECK(brute_force_excellent(g, piece, Rational(3, 10)).kind ==
              ExcellenceKind::ExcellentExact);
    }
    Graph g = union_of_cliques({4, 4});
    CHECK_THROWS(extract_excellent_exact(g, g.all_vertices(), Rational(2, 5), 2));  // eps >= 1/4
    CHECK_THROWS(extract_excellent_exact(g, singleton(8, 0), Rational(2, 5), 1));
}

TEST_CASE("descent past the tree bound reconstructs a verified tree") {
    // half_graph(5) with a forced t=1: the first split already exceeds the
    // cap and must assemble a height-1 configuration
    Graph g = half_graph(5);
    PipelineParams p;
    p.n = 10;
    p.eps = Rational(2, 5);
    p.t = 1;
    p.alpha = Rational(1, 10);
    p.beta = Rational(2, 15);
    p.q = 10;
    p.c = 2;
    p.sizes = {2};
    bool threw = false;
    try {
        extract_excellent(g, g.all_vertices(), p, default_family(), 1);
    } catch (const TreeBoundViolation& e) {
        threw = true;
        CHECK(e.tree.height == 1);
        CHECK(verify_special_tree(g, e.tree));
    }
    CHECK(threw);
}

TEST_CASE("greedy_cover consumes down to the remainder") {
    Graph g = union_of_cliques({745});
    PipelineParams p = clique_params_740();
    p.n = 745;
    PipelineConfig config;
    CoverResult r = greedy_cover(g, p, config);
    CHECK(r.pieces.size() == 1);
    CHECK(r.pieces[0].piece.count() == 740);
    CHECK(r.remainder.count() == 5);

    CoverResult again = greedy_cover(g, p, config);
    CHECK(again.pieces[0].piece == r.pieces[0].piece);  // seed determinism

    Graph exact = union_of_cliques({740});
    PipelineParams pe = clique_params_740();
    CoverResult re = greedy_cover(exact, pe, config);
    CHECK(re.pieces.size() == 1);
    CHECK(re.remainder.none());
}

TEST_CASE("random_refine block law") {
    Graph g = union_of_cliques({740});
    VertexSet piece = g.all_vertices();
    RefineResult r = random_refine(g, piece, 37, Rational(1, 15), default_family(), 3, 16);
    CHECK(r.pieces.size() == 20);
    for (const VertexSet& block : r.pieces) CHECK(block.count() == 37);

    // r = 1 short circuit
    Graph small = union_of_cliques({37});
    RefineResult one = random_refine(small, small.all_vertices(), 37, Rational(1, 15),
                                     default_family(), 3, 16);
    CHECK(one.pieces.size() == 1);
    CHECK(one.attempts == 1);
    CHECK(one.pieces[0] == small.all_vertices());
}

TEST_CASE("distribute_remainder round robin") {
    Graph g = union_of_cliques({745});
    PipelineParams p = clique_params_740();
    p.n = 745;
    PipelineConfig config;
    CoverResult cover = greedy_cover(g, p, config);
    RefineResult refined = random_refine(g, cover.pieces[0].piece, 37, p.beta, default_family(),
                                         1, 16);
    Partition part = distribute_remainder(g, refined.pieces, cover.remainder, p, config);
    REQUIRE(part.pieces.size() == 20);
    int of38 = 0, of37 = 0;
    for (const VertexSet& piece : part.pieces) {
        if (piece.count() == 38) ++of38;
        if (piece.count() == 37) ++of37;
    }
    CHECK(of38 == 5);
    CHECK(of37 == 15);

    // empty remainder leaves pieces unchanged
    Partition same = distribute_remainder(g, refined.pieces, VertexSet(745), p, config);
    for (std::size_t i = 0; i < same.pieces.size(); ++i)
        CHECK(same.pieces[i] == refined.pieces[i]);
}

TEST_CASE("stable_partition on the empty graph") {
    // t = 1 admissible: a height-1 tree needs an edge
    Graph g(30000);
    PipelineConfig config;
    config.seed = 5;
    auto [part, report] = stable_partition(g, Rational(1, 5), TreeBoundMode::Fixed, 1, config);
    CHECK(report.check.pass);
    CHECK(report.tree_bound_t == 1);
    CHECK(report.params.sizes == std::vector<long long>{750});
    for (const VertexSet& piece : part.pieces) CHECK(piece.count() == 750);
    for (const PairRecord& pr : report.check.pairs) {
        CHECK(pr.uniform);
        CHECK(pr.density == Rational(0));
    }

    auto [part2, report2] = stable_partition(g, Rational(1, 5), TreeBoundMode::Fixed, 1, config);
    REQUIRE(part2.pieces.size() == part.pieces.size());
    for (std::size_t i = 0; i < part.pieces.size(); ++i)
        CHECK(part2.pieces[i] == part.pieces[i]);  // seed determinism
}

TEST_CASE("stable_partition rejects unstable graphs in auto mode") {
    Graph g = erdos_renyi(2000, Rational(1, 2), 3);
    PipelineConfig config;
    bool threw = false;
    try {
        stable_partition(g, Rational(1, 5), TreeBoundMode::Auto, 0, config);
    } catch (const NoAdmissibleTreeBound& e) {
        threw = true;
        CHECK(verify_special_tree(g, e.tree));
        CHECK(std::string(e.what()).find("leaves") != std::string::npos);
    }
    CHECK(threw);
}

TEST_CASE("tsr_partition parameter recovery") {
    CHECK_THROWS(tsr_partition(Graph(10), Rational(1, 5), 0, false, PipelineConfig{}));
    // bound exponent law: 2^{k+3} - 7
    Graph g(8000);
    PipelineConfig config;
    auto [part, report] = tsr_partition(g, Rational(4, 5), 1, true, config);
    CHECK(report.eps_prime == Rational(8, 25));
    CHECK(report.zeta == doctest::Approx(0.8));
    CHECK(report.bound_exponent == 9);
    CHECK(report.pipeline.check.pass);
    (void)part;
}

TEST_CASE("tsr_partition practical mode on cliques") {
    Graph g = union_of_cliques(std::vector<int>(10, 1600));
    PipelineConfig config;
    config.seed = 2;
    auto [part, report] = tsr_partition(g, Rational(7, 10), 1, true, config);
    CHECK(report.eps_prime == Rational(49, 200));
    CHECK(report.pipeline.tree_bound_t == 2);
    CHECK(report.pipeline.check.pass);
    // certified pairs have extreme density at zeta = eps
    Rational zeta(7, 10);
    for (const PairRecord& pr : report.pipeline.check.pairs) {
        CHECK(pr.uniform);
        bool extreme = pr.density < zeta || pr.density > Rational(1) - zeta;
        CHECK(extreme);
    }
    (void)part;
}
