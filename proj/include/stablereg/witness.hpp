#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "stablereg/graph.hpp"

namespace stablereg {

constexpr std::uint64_t kDefaultBudget = 10'000'000;

enum class Outcome { Found, CertifiedAbsent, Inconclusive };

const char* outcome_name(Outcome o);

// a_1..a_k, b_1..b_k, all 2k distinct, R(a_i,b_j) iff i<j.
struct HalfGraphWitness {
    std::vector<int> a;
    std::vector<int> b;
};

// Height-h configuration.  nodes[node_index(rho)] for binary strings rho of
// length < h (heap order: root 0, children 2p+1/2p+2), leaves[eta] for eta
// read as an h-bit string (leaf index = binary value, msb = first branch).
// Leaves are distinct from all nodes; nodes may repeat.
struct SpecialTreeWitness {
    int height = 0;
    std::vector<int> nodes;   // size 2^h - 1
    std::vector<int> leaves;  // size 2^h
};

struct HalfGraphSearch {
    Outcome outcome;
    std::optional<HalfGraphWitness> witness;
    std::uint64_t nodes_explored = 0;
};

struct SpecialTreeSearch {
    Outcome outcome;
    std::optional<SpecialTreeWitness> witness;
    std::uint64_t nodes_explored = 0;
};

bool verify_half_graph(const Graph& g, const HalfGraphWitness& w, int k);
bool verify_special_tree(const Graph& g, const SpecialTreeWitness& w);

// Exact backtracking search, budgeted by explored assignments.  Found
// witnesses re-verify; CertifiedAbsent only on exhaustion within budget.
HalfGraphSearch find_half_graph(const Graph& g, int k, std::uint64_t budget = kDefaultBudget);

struct MaxHalfGraphResult {
    int max_length = 0;                    // largest k <= cap with Found
    std::vector<HalfGraphSearch> levels;   // outcomes for k = 1, 2, ...
};

MaxHalfGraphResult max_half_graph_length(const Graph& g, int cap,
                                         std::uint64_t budget = kDefaultBudget);

SpecialTreeSearch find_special_tree(const Graph& g, int height,
                                    std::uint64_t budget = kDefaultBudget);

struct TreeBoundResult {
    bool certified = false;
    int t = 0;                              // smallest height certified absent
    std::vector<SpecialTreeSearch> levels;  // outcomes for h = 1, 2, ...
};

// Smallest t <= cap with find_special_tree(G, t) certified absent.
TreeBoundResult empirical_tree_bound(const Graph& g, int cap,
                                     std::uint64_t budget = kDefaultBudget);

// t = 2^{k+2} - 2; overflow guarded (k <= 56).
long long tree_bound_from_k(int k);

// k = 2^{h+1}; overflow guarded.
long long stability_from_tree(int h);

// Largest d <= cap such that some d-subset of A is shattered by the traces of
// A and their complements.  Brute force; requires cap <= 6.
int vc_dimension(const Graph& g, const VertexSet& a, int cap);

// trace_count(G,A) <= sum_{i<=k} C(|A|,i); presumes the caller certified
// k-edge stability.
bool sauer_check(const Graph& g, const VertexSet& a, int k);

}  // namespace stablereg
