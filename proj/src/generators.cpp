#include "stablereg/generators.hpp"

#include <numeric>
#include <stdexcept>

#include "stablereg/rng.hpp"

namespace stablereg {

Graph half_graph(int k) {
    if (k < 1) throw std::invalid_argument("half_graph: k must be >= 1");
    Graph g(2 * k);
    // a_i = i-1, b_j = k+j-1
    for (int i = 1; i <= k; ++i)
        for (int j = i + 1; j <= k; ++j) g.add_edge(i - 1, k + j - 1);
    return g;
}

Graph union_of_cliques(const std::vector<int>& sizes) {
    if (sizes.empty()) throw std::invalid_argument("union_of_cliques: empty size list");
    int n = 0;
    for (int s : sizes) {
        if (s < 1) throw std::invalid_argument("union_of_cliques: sizes must be >= 1");
        n += s;
    }
    Graph g(n);
    int base = 0;
    for (int s : sizes) {
        for (int u = 0; u < s; ++u)
            for (int v = u + 1; v < s; ++v) g.add_edge(base + u, base + v);
        base += s;
    }
    return g;
}

Graph complete_multipartite(const std::vector<int>& sizes) {
    if (sizes.empty()) throw std::invalid_argument("complete_multipartite: empty size list");
    int n = 0;
    std::vector<int> part;
    for (std::size_t p = 0; p < sizes.size(); ++p) {
        if (sizes[p] < 1) throw std::invalid_argument("complete_multipartite: sizes must be >= 1");
        for (int i = 0; i < sizes[p]; ++i) part.push_back(static_cast<int>(p));
        n += sizes[p];
    }
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (part[u] != part[v]) g.add_edge(u, v);
    return g;
}

Graph erdos_renyi(int n, const Rational& p, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("erdos_renyi: n must be >= 1");
    if (p < Rational(0) || p > Rational(1))
        throw std::invalid_argument("erdos_renyi: p must be in [0,1]");
    Graph g(n);
    Rng rng(seed);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            // include iff draw/den < num, an exact Bernoulli(p)
            std::uint64_t draw = rng.below(static_cast<std::uint64_t>(p.den));
            if (draw < static_cast<std::uint64_t>(p.num)) g.add_edge(u, v);
        }
    return g;
}

Graph special_tree_example() {
    Graph g(7);
    g.add_edge(0, 6);  // (b_e, a_11)
    g.add_edge(0, 5);  // (b_e, a_10)
    g.add_edge(2, 6);  // (b_1, a_11)
    g.add_edge(1, 4);  // (b_0, a_01)
    return g;
}

PlantedHalfGraph planted_half_graph(const Graph& base, int k, std::uint64_t seed) {
    int n = base.vertex_count();
    if (k < 1) throw std::invalid_argument("planted_half_graph: k must be >= 1");
    if (n < 2 * k) throw std::invalid_argument("planted_half_graph: base graph smaller than 2k");

    std::vector<int> ids(n);
    std::iota(ids.begin(), ids.end(), 0);
    Rng rng(seed);
    rng.shuffle(ids);
    std::vector<int> a(ids.begin(), ids.begin() + k);
    std::vector<int> b(ids.begin() + k, ids.begin() + 2 * k);

    std::vector<std::vector<int>> role(n);  // role[v] = {side, index}; side 0 = a, 1 = b
    for (int v = 0; v < n; ++v) role[v] = {};
    for (int i = 0; i < k; ++i) role[a[i]] = {0, i + 1};
    for (int j = 0; j < k; ++j) role[b[j]] = {1, j + 1};

    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            bool edge = base.adjacent(u, v);
            if (!role[u].empty() && !role[v].empty() && role[u][0] != role[v][0]) {
                int i = role[u][0] == 0 ? role[u][1] : role[v][1];
                int j = role[u][0] == 1 ? role[u][1] : role[v][1];
                edge = i < j;  // the k*k constrained pairs
            }
            if (edge) g.add_edge(u, v);
        }
    return PlantedHalfGraph{std::move(g), std::move(a), std::move(b)};
}

}  // namespace stablereg
