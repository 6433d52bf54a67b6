#include "stablereg/witness.hpp"

#include <algorithm>
#include <climits>
#include <functional>
#include <set>
#include <stdexcept>

namespace stablereg {

const char* outcome_name(Outcome o) {
    switch (o) {
        case Outcome::Found: return "Found";
        case Outcome::CertifiedAbsent: return "CertifiedAbsent";
        default: return "Inconclusive";
    }
}

bool verify_half_graph(const Graph& g, const HalfGraphWitness& w, int k) {
    if (static_cast<int>(w.a.size()) != k || static_cast<int>(w.b.size()) != k) return false;
    std::vector<int> all;
    all.insert(all.end(), w.a.begin(), w.a.end());
    all.insert(all.end(), w.b.begin(), w.b.end());
    std::sort(all.begin(), all.end());
    if (std::adjacent_find(all.begin(), all.end()) != all.end()) return false;
    for (int v : all)
        if (v < 0 || v >= g.vertex_count()) return false;
    for (int i = 1; i <= k; ++i)
        for (int j = 1; j <= k; ++j)
            if (g.adjacent(w.a[i - 1], w.b[j - 1]) != (i < j)) return false;
    return true;
}

namespace {

struct HalfGraphCtx {
    const Graph& g;
    int k;
    std::uint64_t budget;
    std::uint64_t nodes = 0;
    bool out_of_budget = false;
    std::vector<int> a, b;

    bool charge() {
        if (++nodes > budget) {
            out_of_budget = true;
            return false;
        }
        return true;
    }

    // Invariants: cand_a = unused vertices non-adjacent to every chosen b_j;
    // cand_b = unused vertices adjacent to every chosen a_i.
    bool dfs(const Bitset& cand_a, const Bitset& cand_b) {
        int placed = static_cast<int>(a.size());
        if (placed == k) return true;
        int need = k - placed;
        if (cand_a.count() < need || cand_b.count() < need) return false;

        for (int av = cand_a.first(); av >= 0; av = cand_a.next(av)) {
            if (!charge()) return false;
            // b_i must be adjacent to a_1..a_{i-1} and non-adjacent to a_i.
            Bitset b_cand = and_not(cand_b, g.neighbors(av));
            b_cand.reset(av);
            for (int bv = b_cand.first(); bv >= 0; bv = b_cand.next(bv)) {
                if (!charge()) return false;
                a.push_back(av);
                b.push_back(bv);
                Bitset next_a = and_not(cand_a, g.neighbors(bv));
                next_a.reset(av);
                next_a.reset(bv);
                Bitset next_b = cand_b & g.neighbors(av);
                next_b.reset(bv);
                if (dfs(next_a, next_b)) return true;
                a.pop_back();
                b.pop_back();
                if (out_of_budget) return false;
            }
            if (out_of_budget) return false;
        }
        return false;
    }
};

}  // namespace

HalfGraphSearch find_half_graph(const Graph& g, int k, std::uint64_t budget) {
    if (k < 1) throw std::invalid_argument("find_half_graph: k must be >= 1");
    HalfGraphCtx ctx{g, k, budget, 0, false, {}, {}};
    bool found = false;
    if (2 * k <= g.vertex_count())
        found = ctx.dfs(full_set(g.vertex_count()), full_set(g.vertex_count()));
    HalfGraphSearch result;
    result.nodes_explored = ctx.nodes;
    if (found) {
        HalfGraphWitness w{ctx.a, ctx.b};
        if (!verify_half_graph(g, w, k))
            throw std::logic_error("find_half_graph: witness failed re-verification");
        result.outcome = Outcome::Found;
        result.witness = std::move(w);
    } else if (ctx.out_of_budget) {
        result.outcome = Outcome::Inconclusive;
    } else {
        result.outcome = Outcome::CertifiedAbsent;
    }
    return result;
}

MaxHalfGraphResult max_half_graph_length(const Graph& g, int cap, std::uint64_t budget) {
    if (cap < 1) throw std::invalid_argument("max_half_graph_length: cap must be >= 1");
    MaxHalfGraphResult r;
    for (int k = 1; k <= cap; ++k) {
        r.levels.push_back(find_half_graph(g, k, budget));
        if (r.levels.back().outcome == Outcome::Found) r.max_length = k;
        else break;  // a prefix of a longer witness is a witness, so no Found above an absence
    }
    return r;
}

bool verify_special_tree(const Graph& g, const SpecialTreeWitness& w) {
    int h = w.height;
    if (h < 1) return false;
    std::size_t internal = (std::size_t(1) << h) - 1;
    std::size_t nleaves = std::size_t(1) << h;
    if (w.nodes.size() != internal || w.leaves.size() != nleaves) return false;
    for (int v : w.nodes)
        if (v < 0 || v >= g.vertex_count()) return false;
    for (int leaf : w.leaves) {
        if (leaf < 0 || leaf >= g.vertex_count()) return false;
        for (int node : w.nodes)
            if (leaf == node) return false;  // leaves are distinct from all nodes
    }
    for (std::size_t eta = 0; eta < nleaves; ++eta) {
        int leaf = w.leaves[eta];
        std::size_t pos = 0;
        for (int i = h - 1; i >= 0; --i) {
            int bit = static_cast<int>((eta >> i) & 1);
            if (g.adjacent(leaf, w.nodes[pos]) != (bit == 1)) return false;
            pos = 2 * pos + 1 + bit;
        }
    }
    return true;
}

namespace {

constexpr long long kDomainBuildThreshold = 8192;

struct TreeCtx {
    const Graph& g;
    int h;
    std::uint64_t budget;
    std::uint64_t nodes_explored = 0;
    bool out_of_budget = false;

    std::vector<int> node_of;        // per internal heap position
    std::vector<int> node_uses;      // per vertex: times used as a node
    std::vector<Bitset> leaf_set;    // per leaf position, once materialized
    std::vector<long long> leaf_free;  // |leaf_set \ current nodes|
    std::vector<char> leaf_live;

    explicit TreeCtx(const Graph& graph, int height, std::uint64_t b)
        : g(graph), h(height), budget(b),
          node_of((std::size_t(1) << height) - 1, -1),
          node_uses(graph.vertex_count(), 0),
          leaf_set(std::size_t(1) << height, Bitset()),
          leaf_live(std::size_t(1) << height, 0) {
        leaf_free.assign(std::size_t(1) << height, 0);
    }

    bool is_leaf_pos(std::size_t p) const { return p >= (std::size_t(1) << h) - 1; }
    int level_of(std::size_t p) const {
        int lvl = 0;
        while (p >= (std::size_t(2) << lvl) - 1) ++lvl;
        return lvl;
    }

    // Vertices with at least one neighbor in C; only they can split C.
    std::vector<int> candidates(const Bitset& c) const {
        std::vector<int> out;
        if (c.count() <= kDomainBuildThreshold) {
            Bitset domain(g.vertex_count());
            c.for_each([&](int v) { domain |= g.neighbors(v); });
            out = domain.to_vector();
        } else {
            out.reserve(g.vertex_count());
            for (int b = 0; b < g.vertex_count(); ++b)
                if (intersects(g.neighbors(b), c)) out.push_back(b);
        }
        return out;
    }

    // Does some vertex split C into halves of size >= need each?  Count-only;
    // no sets are materialized.
    bool splittable(const Bitset& c, long long need) const {
        long long csize = c.count();
        for (int b : candidates(c)) {
            long long c1 = count_and(c, g.neighbors(b));
            if (c1 < need) continue;
            long long c0 = csize - c1 - (c.test(b) ? 1 : 0);
            if (c0 >= need) return true;
        }
        return false;
    }

    bool add_node(int v) {
        if (node_uses[v]++ == 0) {
            for (std::size_t l = 0; l < leaf_live.size(); ++l)
                if (leaf_live[l] && leaf_set[l].test(v) && --leaf_free[l] == 0) {
                    remove_node_partial(v, l + 1);
                    return false;
                }
        }
        return true;
    }

    void remove_node(int v) { remove_node_partial(v, leaf_live.size()); }

    void remove_node_partial(int v, std::size_t upto) {
        if (--node_uses[v] == 0)
            for (std::size_t l = 0; l < upto; ++l)
                if (leaf_live[l] && leaf_set[l].test(v)) ++leaf_free[l];
    }

    long long free_count(const Bitset& c) const {
        long long cnt = c.count();
        c.for_each([&](int v) {
            if (node_uses[v] > 0) --cnt;
        });
        return cnt;
    }

    bool solve(std::size_t pos, const Bitset& c, const std::function<bool()>& cont) {
        if (is_leaf_pos(pos)) {
            std::size_t l = pos - ((std::size_t(1) << h) - 1);
            long long free = free_count(c);
            if (free == 0) return false;
            leaf_set[l] = c;
            leaf_free[l] = free;
            leaf_live[l] = 1;
            bool ok = cont();
            if (!ok) leaf_live[l] = 0;
            return ok;
        }

        int lvl = level_of(pos);
        long long leaves_per_child = 1LL << (h - lvl - 1);
        bool child_internal = lvl + 1 < h;
        long long grandchild_need = child_internal ? (1LL << (h - lvl - 2)) : 0;

        long long csize = c.count();
        for (int b : candidates(c)) {
            long long cnt1 = count_and(c, g.neighbors(b));
            if (cnt1 < leaves_per_child) continue;
            long long cnt0 = csize - cnt1 - (c.test(b) ? 1 : 0);
            if (cnt0 < leaves_per_child) continue;
            Bitset one = c & g.neighbors(b);
            Bitset zero;
            auto make_zero = [&] {
                zero = and_not(c, g.neighbors(b));
                zero.reset(b);
            };

            // One-level lookahead, cheaper side first.
            if (child_internal) {
                if (cnt1 <= cnt0) {
                    if (!splittable(one, grandchild_need)) continue;
                    make_zero();
                    if (!splittable(zero, grandchild_need)) continue;
                } else {
                    make_zero();
                    if (!splittable(zero, grandchild_need)) continue;
                    if (!splittable(one, grandchild_need)) continue;
                }
            } else {
                make_zero();
            }

            if (++nodes_explored > budget) {
                out_of_budget = true;
                return false;
            }
            if (!add_node(b)) continue;
            node_of[pos] = b;

            bool ok = solve(2 * pos + 1, zero,
                            [&] { return solve(2 * pos + 2, one, cont); });
            if (ok) return true;
            node_of[pos] = -1;
            remove_node(b);
            if (out_of_budget) return false;
        }
        return false;
    }
};

}  // namespace

SpecialTreeSearch find_special_tree(const Graph& g, int height, std::uint64_t budget) {
    if (height < 1) throw std::invalid_argument("find_special_tree: height must be >= 1");
    if (height > 20) throw std::invalid_argument("find_special_tree: height too large");

    SpecialTreeSearch result;
    if (g.vertex_count() == 0) {
        result.outcome = Outcome::CertifiedAbsent;
        return result;
    }

    TreeCtx ctx(g, height, budget);
    bool found = ctx.solve(0, full_set(g.vertex_count()), [] { return true; });
    result.nodes_explored = ctx.nodes_explored;
    if (found) {
        SpecialTreeWitness w;
        w.height = height;
        w.nodes = ctx.node_of;
        w.leaves.resize(std::size_t(1) << height);
        for (std::size_t l = 0; l < w.leaves.size(); ++l) {
            int pick = -1;
            ctx.leaf_set[l].for_each([&](int v) {
                if (pick < 0 && ctx.node_uses[v] == 0) pick = v;
            });
            w.leaves[l] = pick;
        }
        if (!verify_special_tree(g, w))
            throw std::logic_error("find_special_tree: witness failed re-verification");
        result.outcome = Outcome::Found;
        result.witness = std::move(w);
    } else if (ctx.out_of_budget) {
        result.outcome = Outcome::Inconclusive;
    } else {
        result.outcome = Outcome::CertifiedAbsent;
    }
    return result;
}

TreeBoundResult empirical_tree_bound(const Graph& g, int cap, std::uint64_t budget) {
    if (cap < 1) throw std::invalid_argument("empirical_tree_bound: cap must be >= 1");
    TreeBoundResult r;
    for (int h = 1; h <= cap; ++h) {
        r.levels.push_back(find_special_tree(g, h, budget));
        if (r.levels.back().outcome == Outcome::CertifiedAbsent) {
            r.certified = true;
            r.t = h;
            return r;
        }
        if (r.levels.back().outcome == Outcome::Inconclusive) return r;
    }
    return r;
}

long long tree_bound_from_k(int k) {
    if (k < 1 || k > 56) throw std::invalid_argument("tree_bound_from_k: k out of range [1,56]");
    return (1LL << (k + 2)) - 2;
}

long long stability_from_tree(int h) {
    if (h < 1 || h > 61) throw std::invalid_argument("stability_from_tree: h out of range [1,61]");
    return 1LL << (h + 1);
}

int vc_dimension(const Graph& g, const VertexSet& a, int cap) {
    if (a.none()) throw std::invalid_argument("vc_dimension: empty set");
    if (cap < 0 || cap > 6) throw std::invalid_argument("vc_dimension: cap must be in [0,6]");

    // Distinct traces of A, both polarities.
    std::vector<Bitset> traces;
    {
        std::set<std::vector<std::uint64_t>> seen;
        for (int b = 0; b < g.vertex_count(); ++b)
            for (int pol = 0; pol < 2; ++pol) {
                Bitset t = trace(g, b, a, pol);
                if (seen.insert(t.key()).second) traces.push_back(std::move(t));
            }
    }

    std::vector<int> elems = a.to_vector();
    int m = static_cast<int>(elems.size());
    int best = 0;
    for (int d = 1; d <= std::min(cap, m); ++d) {
        std::uint64_t want = (d == 6) ? ~std::uint64_t(0) : ((std::uint64_t(1) << (1 << d)) - 1);
        bool shattered_some = false;
        std::vector<int> idx(d);
        for (int i = 0; i < d; ++i) idx[i] = i;
        while (true) {
            std::uint64_t seen = 0;
            for (const Bitset& t : traces) {
                int pat = 0;
                for (int i = 0; i < d; ++i)
                    if (t.test(elems[idx[i]])) pat |= 1 << i;
                seen |= std::uint64_t(1) << pat;
                if (seen == want) break;
            }
            if (seen == want) {
                shattered_some = true;
                break;
            }
            int i = d - 1;
            while (i >= 0 && idx[i] == m - d + i) --i;
            if (i < 0) break;
            ++idx[i];
            for (int j = i + 1; j < d; ++j) idx[j] = idx[j - 1] + 1;
        }
        if (!shattered_some) return best;
        best = d;
    }
    return best;
}

bool sauer_check(const Graph& g, const VertexSet& a, int k) {
    if (a.none()) throw std::invalid_argument("sauer_check: empty set");
    long long m = a.count();
    __int128 rhs = 0;
    __int128 binom = 1;  // C(m, 0)
    const __int128 cap = static_cast<__int128>(LLONG_MAX);
    for (int i = 0; i <= k; ++i) {
        rhs += binom;
        if (rhs >= cap) return true;  // bound astronomically large, trivially satisfied
        if (i < k) {
            binom = binom * (m - i) / (i + 1);
            if (binom >= cap) return true;
        }
    }
    return trace_count(g, a) <= static_cast<long long>(rhs);
}

}  // namespace stablereg
