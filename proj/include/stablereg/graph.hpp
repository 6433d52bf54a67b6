#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "stablereg/bitset.hpp"
#include "stablereg/rational.hpp"

namespace stablereg {

using VertexSet = Bitset;

// Finite symmetric irreflexive edge relation over vertices 0..n-1, stored as
// dense bit rows.  Immutable after construction; all queries are read-only.
class Graph {
public:
    explicit Graph(int n);

    int vertex_count() const { return n_; }
    long long edge_count() const { return edges_; }

    void add_edge(int u, int v);  // throws on self-loop or out-of-range id

    bool adjacent(int u, int v) const { return adj_[u].test(v); }
    const Bitset& neighbors(int v) const { return adj_[v]; }
    long long degree(int v) const { return adj_[v].count(); }

    VertexSet all_vertices() const { return full_set(n_); }

    static Graph load_edge_list(std::istream& in);
    static Graph load_edge_list_file(const std::string& path);
    void save_edge_list(std::ostream& out) const;

private:
    int n_;
    long long edges_ = 0;
    std::vector<Bitset> adj_;
};

// e(A,B) / (|A| |B|) over ordered pairs a != b; exact, symmetric.
// Throws on an empty side.
Rational density(const Graph& g, const VertexSet& a, const VertexSet& b);

// polarity 1: A n N(b);  polarity 0: A \ N(b).  The two partition A.
VertexSet trace(const Graph& g, int b, const VertexSet& a, int polarity);

// Number of distinct positive traces of A over all b in G.
long long trace_count(const Graph& g, const VertexSet& a);

}  // namespace stablereg
