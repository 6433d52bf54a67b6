#include "stablereg/partition.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "stablereg/rng.hpp"

namespace stablereg {

namespace {

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t salt) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (salt + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

VertexSet lowest(const VertexSet& s, long long k) {
    VertexSet r = s;
    r.trim_to(k);
    return r;
}

}  // namespace

SizeSequence size_sequence(long long n, const Rational& eps, int t) {
    if (t < 1) throw std::invalid_argument("size_sequence: t must be >= 1");
    if (eps <= Rational(0)) throw std::invalid_argument("size_sequence: eps must be positive");
    SizeSequence s;
    s.q = (4 * eps.den + eps.num - 1) / eps.num;  // ceil(1/alpha)
    long long qp = 1;
    for (int i = 0; i < t - 1; ++i) {
        if (qp > n / s.q + 1) throw std::invalid_argument("size_sequence: q^{t-1} overflow");
        qp *= s.q;
    }
    // c maximal with q^{t-1} c <= alpha n / 2 = eps n / 8
    __int128 num = static_cast<__int128>(eps.num) * n;
    __int128 den = static_cast<__int128>(eps.den) * 8 * qp;
    s.c = static_cast<long long>(num / den);
    s.sizes.resize(t);
    s.sizes[t - 1] = s.c;
    for (int l = t - 2; l >= 0; --l) s.sizes[l] = s.sizes[l + 1] * s.q;
    return s;
}

PipelineParams make_params(long long n, const Rational& eps, int t, std::uint64_t seed,
                           int max_retries) {
    if (t < 1) throw std::invalid_argument("make_params: t must be >= 1");
    if (eps <= Rational(0)) throw std::invalid_argument("make_params: eps must be positive");
    if (t > 60 || !(eps < Rational(1, 1LL << t)))
        throw std::invalid_argument("epsilon too large for tree bound");

    PipelineParams p;
    p.n = n;
    p.eps = eps;
    p.t = t;
    p.alpha = eps / Rational(4);
    p.beta = eps / Rational(3);
    p.seed = seed;
    p.max_retries = max_retries;

    // alpha^2 n/4 - 1 > max{t, 3/eps}
    Rational lhs = p.alpha * p.alpha * Rational(n, 4) - Rational(1);
    Rational rhs = std::max(Rational(t), Rational(3) / eps);
    if (!(lhs > rhs)) throw std::invalid_argument("insufficient n for Step 4(i)");

    SizeSequence s = size_sequence(n, eps, t);
    p.q = s.q;
    p.c = s.c;
    p.sizes = std::move(s.sizes);
    if (p.c <= t) throw std::invalid_argument("insufficient n: base piece size must exceed t");
    return p;
}

namespace {

struct Descent {
    const Graph& g;
    const PipelineParams& pp;
    const WitnessFamily& family;
    std::uint64_t seed;

    std::vector<VertexSet> node_witness;  // per internal heap position
    std::vector<VertexSet> leaf_class;    // per leaf index, depth-t classes
    std::optional<ExtractResult> result;

    Descent(const Graph& graph, const PipelineParams& params, const WitnessFamily& fam,
            std::uint64_t s)
        : g(graph), pp(params), family(fam), seed(s),
          node_witness((std::size_t(1) << params.t) - 1, VertexSet()),
          leaf_class(std::size_t(1) << params.t, VertexSet()) {}

    bool dfs(const VertexSet& a, int depth, std::size_t heap_pos,
             std::vector<std::string>& log) {
        auto split = find_split_witness(g, a, pp.alpha, family, derive_seed(seed, heap_pos));
        if (!split) {
            ExtractResult r;
            r.piece = a;
            r.depth = depth;
            r.provenance = log;
            result = std::move(r);
            return true;
        }

        const VertexSet& w = *split->witness;
        long long wsize = w.count();
        VertexSet class1(g.vertex_count()), class0(g.vertex_count());
        a.for_each([&](int v) {
            long long pos = count_and(w, g.neighbors(v));
            if (pos > wsize - pos) class1.set(v);
            else class0.set(v);
        });

        {
            std::ostringstream os;
            os << "depth " << depth << ": split " << split->class0 << "/" << split->class1
               << " by a set of size " << wsize;
            log.push_back(os.str());
        }

        if (depth == pp.t - 1) {
            node_witness[heap_pos] = w;
            std::size_t base = 2 * heap_pos + 1 - ((std::size_t(1) << pp.t) - 1);
            leaf_class[base] = std::move(class0);
            leaf_class[base + 1] = std::move(class1);
            log.pop_back();
            return false;
        }

        long long next = pp.sizes[depth + 1];
        node_witness[heap_pos] = w;
        if (dfs(lowest(class0, next), depth + 1, 2 * heap_pos + 1, log)) return true;
        if (dfs(lowest(class1, next), depth + 1, 2 * heap_pos + 2, log)) return true;
        log.pop_back();
        return false;
    }

    // Every path split down to depth t: assemble the height-t configuration.
    SpecialTreeWitness assemble() {
        int t = pp.t;
        SpecialTreeWitness tree;
        tree.height = t;
        tree.leaves.resize(std::size_t(1) << t);
        for (std::size_t eta = 0; eta < tree.leaves.size(); ++eta) {
            int leaf = leaf_class[eta].first();
            if (leaf < 0) throw std::logic_error("tree assembly: empty leaf class");
            tree.leaves[eta] = leaf;
        }

        tree.nodes.resize((std::size_t(1) << t) - 1);
        for (std::size_t pos = 0; pos < tree.nodes.size(); ++pos) {
            int lvl = 0;
            while (pos >= (std::size_t(2) << lvl) - 1) ++lvl;
            std::size_t first_leaf = ((pos + 1) << (t - lvl)) - (std::size_t(1) << t);
            std::size_t leaves_below = std::size_t(1) << (t - lvl);

            int chosen = -1;
            node_witness[pos].for_each([&](int b) {
                if (chosen >= 0) return;
                for (int leaf : tree.leaves)
                    if (b == leaf) return;
                for (std::size_t i = 0; i < leaves_below; ++i) {
                    std::size_t eta = first_leaf + i;
                    int leaf = tree.leaves[eta];
                    int bit = static_cast<int>((eta >> (t - lvl - 1)) & 1);
                    if (g.adjacent(b, leaf) != (bit == 1)) return;
                }
                chosen = b;
            });
            if (chosen < 0) throw std::logic_error("tree assembly: no agreeing node element");
            tree.nodes[pos] = chosen;
        }

        if (!verify_special_tree(g, tree))
            throw std::logic_error("tree assembly: configuration failed verification");
        return tree;
    }
};

}  // namespace

ExtractResult extract_excellent(const Graph& g, const VertexSet& a, const PipelineParams& params,
                                const WitnessFamily& family, std::uint64_t seed) {
    long long total = a.count();
    if (total < params.sizes[0])
        throw std::invalid_argument("extract_excellent: set smaller than s_0");
    // |A| >= 1/eps^t
    Rational need = pow_rational(Rational(1) / params.eps, params.t);
    if (Rational(total) < need)
        throw std::invalid_argument("extract_excellent: set smaller than 1/eps^t");

    Descent d(g, params, family, seed);
    std::vector<std::string> log;
    if (d.dfs(lowest(a, params.sizes[0]), 0, 0, log)) return std::move(*d.result);
    throw TreeBoundViolation(d.assemble());
}

VertexSet extract_excellent_exact(const Graph& g, const VertexSet& a, const Rational& eps,
                                  int t) {
    if (t < 1 || t > 60) throw std::invalid_argument("extract_excellent_exact: t out of range");
    if (!(eps < Rational(1, 1LL << t)))
        throw std::invalid_argument("epsilon too large for tree bound");
    long long total = a.count();
    if (Rational(total) < pow_rational(Rational(1) / eps, t))
        throw std::invalid_argument("extract_excellent_exact: set smaller than 1/eps^t");

    // Smallest admissible size: ceil(eps^{t-1} |A|).
    Rational floor_rat = pow_rational(eps, t - 1) * Rational(total);
    long long min_size = (floor_rat.num + floor_rat.den - 1) / floor_rat.den;
    if (min_size < 1) min_size = 1;

    // Exhaustive by descending size: the largest subset of A that the oracle
    // certifies excellent.  Feasible because the oracle caps n at 16.
    std::vector<int> ids = a.to_vector();
    int m = static_cast<int>(ids.size());
    std::vector<std::pair<long long, std::uint32_t>> candidates;
    for (std::uint32_t mask = 1; mask < (std::uint32_t(1) << m); ++mask) {
        long long sz = __builtin_popcount(mask);
        if (sz >= min_size) candidates.push_back({-sz, mask});
    }
    std::sort(candidates.begin(), candidates.end());
    for (auto [neg, mask] : candidates) {
        (void)neg;
        VertexSet s(g.vertex_count());
        for (int i = 0; i < m; ++i)
            if ((mask >> i) & 1) s.set(ids[i]);
        if (brute_force_excellent(g, s, eps).kind == ExcellenceKind::ExcellentExact) return s;
    }
    throw std::logic_error("extract_excellent_exact: no excellent subset at admissible size");
}

CoverResult greedy_cover(const Graph& g, const PipelineParams& params,
                         const PipelineConfig& config) {
    CoverResult out;
    WitnessFamily family;
    family.samples_per_size = config.samples_per_size;
    family.explicit_sets_certified_good = true;  // each piece passed the singleton scan

    VertexSet remaining = g.all_vertices();
    std::uint64_t idx = 0;
    while (remaining.count() >= params.sizes[0]) {
        ExtractResult r =
            extract_excellent(g, remaining, params, family, derive_seed(params.seed, idx));
        remaining.subtract(r.piece);
        family.explicit_unions.push_back(neighbor_union(g, r.piece));
        family.explicit_sets.push_back(r.piece);
        out.pieces.push_back(std::move(r));
        ++idx;
    }
    out.remainder = std::move(remaining);
    return out;
}

RefineResult random_refine(const Graph& g, const VertexSet& piece, long long c,
                           const Rational& zeta, const WitnessFamily& family, std::uint64_t seed,
                           int max_retries) {
    long long size = piece.count();
    if (c < 1 || size % c != 0)
        throw std::invalid_argument("random_refine: c must divide the piece size");
    long long r = size / c;
    if (r == 1) return RefineResult{{piece}, 1};

    std::vector<int> members = piece.to_vector();
    VertexSet last_fail, last_witness;
    for (int attempt = 1; attempt <= max_retries; ++attempt) {
        Rng rng = Rng(seed).substream(static_cast<std::uint64_t>(attempt));
        rng.shuffle(members);
        std::vector<VertexSet> blocks;
        bool ok = true;
        for (long long bidx = 0; bidx < r && ok; ++bidx) {
            VertexSet block(g.vertex_count());
            for (long long i = 0; i < c; ++i) block.set(members[bidx * c + i]);
            auto split =
                find_split_witness(g, block, zeta, family, derive_seed(seed, 1000 + bidx));
            if (split) {
                ok = false;
                last_fail = block;
                last_witness = *split->witness;
            } else {
                blocks.push_back(std::move(block));
            }
        }
        if (ok) return RefineResult{std::move(blocks), attempt};
    }
    throw RefineError(std::move(last_fail), std::move(last_witness));
}

Partition distribute_remainder(const Graph& g, const std::vector<VertexSet>& pieces,
                               const VertexSet& remainder, const PipelineParams& params,
                               const PipelineConfig& config) {
    if (pieces.empty()) throw std::invalid_argument("distribute_remainder: no pieces");
    if (remainder.count() >= params.sizes[0])
        throw std::invalid_argument("distribute_remainder: remainder too large");

    Partition part;
    part.seed = params.seed;
    part.pieces = pieces;
    std::size_t idx = 0;
    remainder.for_each([&](int v) {
        part.pieces[idx % part.pieces.size()].set(v);
        ++idx;
    });

    // Re-certify every augmented piece at eps = 3 beta.
    for (const VertexSet& p : part.pieces) {
        auto good = is_good(g, p, params.eps);
        if (!good.good)
            throw std::runtime_error("distribute_remainder: augmented piece lost goodness");
    }
    WitnessFamily family;
    family.samples_per_size = config.samples_per_size;
    family.explicit_sets = part.pieces;
    for (const VertexSet& p : part.pieces) family.explicit_unions.push_back(neighbor_union(g, p));
    family.explicit_sets_certified_good = true;
    for (std::size_t i = 0; i < part.pieces.size(); ++i) {
        auto split = find_split_witness(g, part.pieces[i], params.eps, family,
                                        derive_seed(params.seed, 2000 + i));
        if (split)
            throw std::runtime_error("distribute_remainder: augmented piece lost excellence");
        part.provenance.push_back("recertified after remainder distribution");
    }
    return part;
}

TheoremBound theorem_bound(const Rational& eps, int t) {
    if (t < 1 || t > 60 || !(eps < Rational(1, 1LL << t)))
        throw std::invalid_argument("epsilon too large for tree bound");
    long long q = (4 * eps.den + eps.num - 1) / eps.num;
    TheoremBound b;
    b.exact = Rational(4) * pow_rational(Rational(q), t - 1) / (eps / Rational(4));
    b.nominal = Rational(4) * pow_rational(Rational(8) / eps, t - 2);
    return b;
}

std::pair<Partition, PipelineReport> stable_partition(const Graph& g, const Rational& eps,
                                                      TreeBoundMode mode, int t_or_k,
                                                      const PipelineConfig& config) {
    if (g.vertex_count() == 0) throw std::invalid_argument("stable_partition: empty graph");
    if (eps <= Rational(0) || !(eps < Rational(1, 2)))
        throw std::invalid_argument("epsilon too large for tree bound");

    PipelineReport report;
    int t;
    switch (mode) {
        case TreeBoundMode::Fixed:
            t = t_or_k;
            break;
        case TreeBoundMode::FromK: {
            long long tt = tree_bound_from_k(t_or_k);
            if (tt > 60) throw std::invalid_argument("epsilon too large for tree bound");
            t = static_cast<int>(tt);
            break;
        }
        case TreeBoundMode::Auto:
        default: {
            int h_max = 0;
            while (h_max + 1 <= config.tree_cap && h_max + 1 <= 60 &&
                   eps < Rational(1, 1LL << (h_max + 1)))
                ++h_max;
            if (h_max == 0) throw std::invalid_argument("epsilon too large for tree bound");
            t = 0;
            for (int h = 1; h <= h_max; ++h) {
                auto probe = find_special_tree(g, h, config.budget);
                report.tree_levels.push_back(probe);
                if (probe.outcome == Outcome::CertifiedAbsent) {
                    t = h;
                    break;
                }
                if (probe.outcome == Outcome::Inconclusive)
                    throw BudgetExhausted("tree bound search exhausted its budget at height " +
                                          std::to_string(h));
            }
            if (t == 0) {
                const auto& last = report.tree_levels.back();
                std::ostringstream os;
                os << "no admissible tree bound: configurations found at every height up to "
                   << h_max << "; height-" << h_max << " nodes";
                for (int v : last.witness->nodes) os << " " << v;
                os << ", leaves";
                for (int v : last.witness->leaves) os << " " << v;
                throw NoAdmissibleTreeBound(os.str(), *last.witness);
            }
            break;
        }
    }
    report.tree_bound_t = t;

    PipelineParams params =
        make_params(g.vertex_count(), eps, t, config.seed, config.max_retries);
    report.params = params;
    auto bound = theorem_bound(eps, t);
    report.exact_bound = bound.exact;
    report.nominal_bound = bound.nominal;

    CoverResult cover = greedy_cover(g, params, config);
    report.remainder_size = cover.remainder.count();

    WitnessFamily refine_family;
    refine_family.samples_per_size = config.samples_per_size;
    refine_family.explicit_sets_certified_good = true;
    for (const auto& p : cover.pieces) {
        refine_family.explicit_sets.push_back(p.piece);
        refine_family.explicit_unions.push_back(neighbor_union(g, p.piece));
    }

    // Fallback threshold for pieces whose shuffles keep failing at beta: the
    // largest zeta whose blocks still pass the final eps check after gaining
    // one remainder vertex.
    report.relaxed_zeta =
        (eps * Rational(params.c + 1) - Rational(1)) / Rational(params.c);

    std::vector<VertexSet> blocks;
    for (std::size_t i = 0; i < cover.pieces.size(); ++i) {
        RefineResult rr;
        try {
            rr = random_refine(g, cover.pieces[i].piece, params.c, params.beta, refine_family,
                               derive_seed(params.seed, 3000 + i), params.max_retries);
        } catch (const RefineError&) {
            if (!(report.relaxed_zeta > params.beta)) throw;
            rr = random_refine(g, cover.pieces[i].piece, params.c, report.relaxed_zeta,
                               refine_family, derive_seed(params.seed, 4000 + i),
                               params.max_retries);
            ++report.refine_escalations;
            report.total_refine_attempts += params.max_retries;
        }
        report.total_refine_attempts += rr.attempts;
        for (auto& b : rr.pieces) blocks.push_back(std::move(b));
    }

    Partition part = distribute_remainder(g, blocks, cover.remainder, params, config);
    report.piece_count = static_cast<long long>(part.pieces.size());
    report.check = verify_partition(g, part.pieces, eps, report.exact_bound);
    return {std::move(part), std::move(report)};
}

std::pair<Partition, TsrReport> tsr_partition(const Graph& g, const Rational& eps, int k,
                                              bool practical, const PipelineConfig& config) {
    if (k < 1 || k > 56) throw std::invalid_argument("tsr_partition: k out of range [1,56]");
    if (eps <= Rational(0) || !(eps < Rational(1)))
        throw std::invalid_argument("tsr_partition: eps must be in (0,1)");

    TsrReport rep;
    rep.eps_prime = eps * eps / Rational(2);
    rep.zeta = eps.to_double();
    rep.bound_exponent = (k + 3 <= 62) ? (1LL << (k + 3)) - 7 : -1;

    auto [part, pipeline] =
        practical ? stable_partition(g, rep.eps_prime, TreeBoundMode::Auto, 0, config)
                  : stable_partition(g, rep.eps_prime, TreeBoundMode::FromK, k, config);
    rep.pipeline = std::move(pipeline);
    return {std::move(part), std::move(rep)};
}

}  // namespace stablereg
