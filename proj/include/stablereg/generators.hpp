#pragma once

#include <cstdint>
#include <vector>

#include "stablereg/graph.hpp"
#include "stablereg/rational.hpp"

namespace stablereg {

// Deterministic, seeded graph families used throughout the tests and
// benchmarks.  All generators produce symmetric irreflexive graphs.

// 2k vertices; a_i = i-1, b_j = k+j-1; edge (a_i, b_j) iff i < j.
Graph half_graph(int k);

Graph union_of_cliques(const std::vector<int>& sizes);

Graph complete_multipartite(const std::vector<int>& sizes);

// Each unordered pair included independently with probability p.
Graph erdos_renyi(int n, const Rational& p, std::uint64_t seed);

// The seven-vertex height-2 witness configuration:
// vertices b_e=0, b_0=1, b_1=2, a_00=3, a_01=4, a_10=5, a_11=6.
Graph special_tree_example();

struct PlantedHalfGraph {
    Graph graph;
    std::vector<int> a_side;  // a_1..a_k
    std::vector<int> b_side;  // b_1..b_k
};

// Rewires 2k seed-chosen vertices of `base` to realize the half-graph pattern;
// exactly the k*k constrained pairs are overwritten.
PlantedHalfGraph planted_half_graph(const Graph& base, int k, std::uint64_t seed);

}  // namespace stablereg
