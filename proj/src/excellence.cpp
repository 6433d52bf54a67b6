#include "stablereg/excellence.hpp"

#include <bit>
#include <numeric>
#include <stdexcept>

#include "stablereg/rng.hpp"

namespace stablereg {

namespace {

void check_eps(const Rational& eps) {
    if (eps <= Rational(0) || eps >= Rational(1, 2))
        throw std::invalid_argument("eps must be in (0, 1/2)");
}

OpinionSummary summarize(long long class1, long long class0, const Rational& eps) {
    OpinionSummary s;
    s.class1 = class1;
    s.class0 = class0;
    long long total = class1 + class0;
    s.threshold = eps * Rational(total);
    long long minority = class1 < class0 ? class1 : class0;
    if (class1 != class0 && lt_scaled(minority, eps, total)) {
        s.majority = class1 > class0 ? 1 : 0;
        s.exceptions = minority;
    } else {
        s.majority = -1;
        s.exceptions = minority;
    }
    return s;
}

}  // namespace

OpinionSummary opinion(const Graph& g, int b, const VertexSet& a, const Rational& eps) {
    check_eps(eps);
    if (a.none()) throw std::invalid_argument("opinion: empty set");
    long long class1 = count_and(a, g.neighbors(b));
    return summarize(class1, a.count() - class1, eps);
}

VertexSet neighbor_union(const Graph& g, const VertexSet& s) {
    VertexSet u(g.vertex_count());
    s.for_each([&](int v) { u |= g.neighbors(v); });
    return u;
}

namespace {

constexpr long long kDomainBuildThreshold = 2048;

// Vertices with a neighbor in A; anything else leaves A one-sided and can
// neither break goodness nor split A.
std::vector<int> split_candidates(const Graph& g, const VertexSet& a) {
    std::vector<int> out;
    if (a.count() <= kDomainBuildThreshold) {
        out = neighbor_union(g, a).to_vector();
    } else {
        out.resize(static_cast<std::size_t>(g.vertex_count()));
        std::iota(out.begin(), out.end(), 0);
    }
    return out;
}

}  // namespace

GoodnessResult is_good(const Graph& g, const VertexSet& a, const Rational& eps) {
    check_eps(eps);
    if (a.none()) throw std::invalid_argument("is_good: empty set");
    long long total = a.count();
    GoodnessResult r;
    r.good = true;
    for (int b : split_candidates(g, a)) {
        long long class1 = count_and(a, g.neighbors(b));
        long long minority = class1 < total - class1 ? class1 : total - class1;
        if (class1 == total - class1 || !lt_scaled(minority, eps, total)) {
            if (r.good || minority > r.minority) {
                r.witness = b;
                r.minority = minority;
            }
            r.good = false;
        }
    }
    return r;
}

OpinionSummary set_opinion(const Graph& g, int a, const VertexSet& b_set, const Rational& eps) {
    if (!is_good(g, b_set, eps).good)
        throw std::invalid_argument("opinion undefined: the set is not good");
    return opinion(g, a, b_set, eps);
}

WitnessFamily default_family() {
    WitnessFamily f;
    f.samples_per_size = kDefaultSamplesPerSize;
    return f;
}

namespace {

// Class sizes of A under a good B; every t(a,B) is defined.
std::pair<long long, long long> set_classes(const Graph& g, const VertexSet& a,
                                            const VertexSet& b_set, const Rational& eps) {
    long long bsize = b_set.count();
    long long class1 = 0, class0 = 0;
    a.for_each([&](int v) {
        long long pos = count_and(b_set, g.neighbors(v));
        if (pos > bsize - pos) ++class1;
        else ++class0;
    });
    (void)eps;
    return {class1, class0};
}

}  // namespace

ExcellenceVerdict excellent_wrt(const Graph& g, const VertexSet& a, const VertexSet& b_set,
                                const Rational& eps, bool b_certified_good) {
    check_eps(eps);
    if (a.none()) throw std::invalid_argument("excellent_wrt: empty set");
    if (!b_certified_good && !is_good(g, b_set, eps).good)
        throw std::invalid_argument("excellent_wrt: the candidate set is not good");
    auto [class1, class0] = set_classes(g, a, b_set, eps);
    long long total = a.count();
    ExcellenceVerdict v;
    v.class1 = class1;
    v.class0 = class0;
    long long minority = class1 < class0 ? class1 : class0;
    if (lt_scaled(minority, eps, total)) {
        v.kind = ExcellenceKind::ExcellentWrtFamily;
    } else {
        v.kind = ExcellenceKind::NotExcellent;
        v.witness = b_set;
    }
    return v;
}

std::optional<ExcellenceVerdict> find_split_witness(const Graph& g, const VertexSet& a,
                                                    const Rational& eps,
                                                    const WitnessFamily& family,
                                                    std::uint64_t seed) {
    check_eps(eps);
    if (a.none()) throw std::invalid_argument("find_split_witness: empty set");
    long long total = a.count();

    auto splits = [&](const VertexSet& b_set, ExcellenceVerdict& out) {
        auto [class1, class0] = set_classes(g, a, b_set, eps);
        long long minority = class1 < class0 ? class1 : class0;
        if (lt_scaled(minority, eps, total)) return false;
        out.kind = ExcellenceKind::NotExcellent;
        out.witness = b_set;
        out.class1 = class1;
        out.class0 = class0;
        return true;
    };

    // Singletons: always good; t(a,{b}) = R(a,b).
    for (int b : split_candidates(g, a)) {
        long long class1 = count_and(a, g.neighbors(b));
        long long minority = class1 < total - class1 ? class1 : total - class1;
        if (!lt_scaled(minority, eps, total)) {
            ExcellenceVerdict v;
            v.kind = ExcellenceKind::NotExcellent;
            v.witness = singleton(g.vertex_count(), b);
            v.class1 = class1;
            v.class0 = total - class1;
            return v;
        }
    }

    bool have_unions = family.explicit_unions.size() == family.explicit_sets.size();
    for (std::size_t i = 0; i < family.explicit_sets.size(); ++i) {
        const VertexSet& b_set = family.explicit_sets[i];
        if (b_set.none()) continue;
        if (have_unions && lt_scaled(count_and(a, family.explicit_unions[i]), eps, total))
            continue;  // class1 cannot reach eps|A|
        if (!family.explicit_sets_certified_good && !is_good(g, b_set, eps).good) continue;
        ExcellenceVerdict v;
        if (splits(b_set, v)) return v;
    }

    if (family.samples_per_size > 0) {
        long long lo = 1;
        {
            // ceil(eps * total)
            __int128 num = static_cast<__int128>(eps.num) * total;
            lo = static_cast<long long>((num + eps.den - 1) / eps.den);
            if (lo < 1) lo = 1;
        }
        long long hi = (total + 3) / 4;
        if (hi < lo) hi = lo;
        if (hi > g.vertex_count()) hi = g.vertex_count();
        if (lo > g.vertex_count()) lo = g.vertex_count();

        std::vector<long long> sizes;
        long long span = hi - lo;
        int steps = family.max_sample_sizes;
        if (span + 1 <= steps) {
            for (long long s = lo; s <= hi; ++s) sizes.push_back(s);
        } else {
            for (int i = 0; i < steps; ++i)
                sizes.push_back(lo + span * i / (steps - 1));
        }

        Rng rng(seed);
        std::vector<int> ids(g.vertex_count());
        for (long long s : sizes)
            for (int rep = 0; rep < family.samples_per_size; ++rep) {
                std::iota(ids.begin(), ids.end(), 0);
                // partial Fisher-Yates: first s entries are a uniform subset
                VertexSet b_set(g.vertex_count());
                for (long long i = 0; i < s; ++i) {
                    std::size_t j = i + rng.below(ids.size() - i);
                    std::swap(ids[i], ids[j]);
                    b_set.set(ids[i]);
                }
                if (!is_good(g, b_set, eps).good) continue;
                ExcellenceVerdict v;
                if (splits(b_set, v)) return v;
            }
    }
    return std::nullopt;
}

ExcellenceVerdict brute_force_excellent(const Graph& g, const VertexSet& a, const Rational& eps) {
    check_eps(eps);
    if (a.none()) throw std::invalid_argument("brute_force_excellent: empty set");
    int n = g.vertex_count();
    if (n > 16) throw std::invalid_argument("oracle scale exceeded");

    std::vector<std::uint32_t> adj(n, 0);
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (g.adjacent(u, v)) adj[u] |= std::uint32_t(1) << v;

    std::uint32_t a_mask = 0;
    a.for_each([&](int v) { a_mask |= std::uint32_t(1) << v; });
    long long total = a.count();

    for (std::uint32_t mask = 1; mask < (std::uint32_t(1) << n); ++mask) {
        long long bsize = std::popcount(mask);
        bool good = true;
        for (int b = 0; b < n && good; ++b) {
            long long pos = std::popcount(mask & adj[b]);
            long long minority = pos < bsize - pos ? pos : bsize - pos;
            if (pos == bsize - pos || !lt_scaled(minority, eps, bsize)) good = false;
        }
        if (!good) continue;

        long long class1 = 0;
        for (int v = 0; v < n; ++v)
            if ((a_mask >> v) & 1) {
                long long pos = std::popcount(mask & adj[v]);
                if (pos > bsize - pos) ++class1;
            }
        long long minority = class1 < total - class1 ? class1 : total - class1;
        if (!lt_scaled(minority, eps, total)) {
            ExcellenceVerdict v;
            v.kind = ExcellenceKind::NotExcellentExact;
            VertexSet w(n);
            for (int i = 0; i < n; ++i)
                if ((mask >> i) & 1) w.set(i);
            v.witness = std::move(w);
            v.class1 = class1;
            v.class0 = total - class1;
            return v;
        }
    }
    ExcellenceVerdict v;
    v.kind = ExcellenceKind::ExcellentExact;
    return v;
}

}  // namespace stablereg
