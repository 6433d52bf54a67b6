#include "stablereg/graph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace stablereg {

Graph::Graph(int n) : n_(n), adj_(n, Bitset(n)) {
    if (n < 0) throw std::invalid_argument("graph: negative vertex count");
}

void Graph::add_edge(int u, int v) {
    if (u < 0 || v < 0 || u >= n_ || v >= n_)
        throw std::out_of_range("graph: vertex id out of range: " + std::to_string(std::max(u, v)));
    if (u == v) throw std::invalid_argument("graph: self-loop at vertex " + std::to_string(u));
    if (!adj_[u].test(v)) {
        adj_[u].set(v);
        adj_[v].set(u);
        ++edges_;
    }
}

Graph Graph::load_edge_list(std::istream& in) {
    std::string line;
    int lineno = 0;
    long long declared_n = -1;
    std::vector<std::pair<int, int>> edges;
    int max_id = -1;

    auto fail = [&](const std::string& msg) {
        throw std::runtime_error("edge list line " + std::to_string(lineno) + ": " + msg);
    };

    bool first_content = true;
    while (std::getline(in, line)) {
        ++lineno;
        std::size_t pos = line.find_first_not_of(" \t\r");
        if (pos == std::string::npos || line[pos] == '#') continue;
        std::istringstream ls(line);
        if (first_content) {
            first_content = false;
            std::string tok;
            ls >> tok;
            if (tok == "n") {
                if (!(ls >> declared_n) || declared_n < 0) fail("bad vertex count header");
                std::string rest;
                if (ls >> rest) fail("trailing token '" + rest + "'");
                continue;
            }
            ls.clear();
            ls.seekg(0);
        }
        long long u, v;
        if (!(ls >> u >> v)) fail("expected two integer vertex ids");
        std::string rest;
        if (ls >> rest) fail("trailing token '" + rest + "'");
        if (u < 0 || v < 0) fail("negative vertex id");
        if (u == v) fail("self-loop at vertex " + std::to_string(u));
        if (declared_n >= 0 && (u >= declared_n || v >= declared_n))
            fail("vertex id " + std::to_string(std::max(u, v)) + " >= declared n " +
                 std::to_string(declared_n));
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
        max_id = std::max(max_id, static_cast<int>(std::max(u, v)));
    }

    int n = declared_n >= 0 ? static_cast<int>(declared_n) : max_id + 1;
    Graph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

Graph Graph::load_edge_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open graph file: " + path);
    return load_edge_list(in);
}

void Graph::save_edge_list(std::ostream& out) const {
    out << "n " << n_ << "\n";
    for (int u = 0; u < n_; ++u)
        adj_[u].for_each([&](int v) {
            if (u < v) out << u << " " << v << "\n";
        });
}

Rational density(const Graph& g, const VertexSet& a, const VertexSet& b) {
    long long ca = a.count(), cb = b.count();
    if (ca == 0 || cb == 0) throw std::invalid_argument("density: empty side");
    long long cross = 0;
    a.for_each([&](int v) { cross += count_and(g.neighbors(v), b); });
    return Rational(cross, ca * cb);
}

VertexSet trace(const Graph& g, int b, const VertexSet& a, int polarity) {
    return polarity ? (a & g.neighbors(b)) : and_not(a, g.neighbors(b));
}

long long trace_count(const Graph& g, const VertexSet& a) {
    std::set<std::vector<std::uint64_t>> seen;
    for (int b = 0; b < g.vertex_count(); ++b)
        seen.insert((a & g.neighbors(b)).key());
    return static_cast<long long>(seen.size());
}

}  // namespace stablereg
