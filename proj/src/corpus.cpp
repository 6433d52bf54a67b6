#include "stablereg/corpus.hpp"

#include "stablereg/generators.hpp"

namespace stablereg {

namespace {

std::string join(const std::vector<int>& sizes) {
    std::string s;
    for (std::size_t i = 0; i < sizes.size(); ++i) {
        if (i) s += '-';
        s += std::to_string(sizes[i]);
    }
    return s;
}

}  // namespace

std::vector<CorpusEntry> small_corpus() {
    std::vector<CorpusEntry> out;

    for (int k = 1; k <= 5; ++k)
        out.push_back({"half-graph-" + std::to_string(k), half_graph(k)});

    out.push_back({"special-tree", special_tree_example()});

    const std::vector<std::vector<int>> clique_lists = {
        {1}, {2}, {3}, {5}, {10}, {1, 1, 1, 1}, {2, 2}, {2, 2, 2, 2, 2},
        {3, 3, 3}, {4, 3, 2, 1}, {5, 5}, {6, 4}, {7, 3}, {9, 1}, {4, 4, 2},
    };
    for (const auto& sizes : clique_lists)
        out.push_back({"cliques-" + join(sizes), union_of_cliques(sizes)});

    const std::vector<std::vector<int>> part_lists = {
        {1, 1}, {2, 2}, {5, 5}, {3, 3, 3}, {2, 2, 2, 2, 2},
        {4, 3, 2, 1}, {6, 4}, {8, 2}, {3, 3, 2, 2}, {1, 9},
    };
    for (const auto& sizes : part_lists)
        out.push_back({"multipartite-" + join(sizes), complete_multipartite(sizes)});

    for (int k = 2; k <= 4; ++k)
        for (std::uint64_t seed = 0; seed < 3; ++seed) {
            auto planted = planted_half_graph(erdos_renyi(10, Rational(1, 2), 90 + seed), k, seed);
            out.push_back({"planted-" + std::to_string(k) + "-s" + std::to_string(seed),
                           planted.graph});
        }

    const std::vector<Rational> probs = {Rational(1, 5), Rational(1, 2), Rational(4, 5)};
    std::uint64_t seed = 1;
    while (out.size() < 200) {
        for (int n = 5; n <= 10 && out.size() < 200; ++n)
            for (const Rational& p : probs) {
                if (out.size() >= 200) break;
                std::string name = "gnp-" + std::to_string(n) + "-" + std::to_string(p.num) + "d" +
                                   std::to_string(p.den) + "-s" + std::to_string(seed);
                out.push_back({name, erdos_renyi(n, p, seed)});
            }
        ++seed;
    }
    return out;
}

}  // namespace stablereg
