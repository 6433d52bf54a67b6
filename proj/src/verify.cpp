#include "stablereg/verify.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

namespace stablereg {

UniformityCertificate pair_uniformity(const Graph& g, const VertexSet& a, const VertexSet& b,
                                      const Rational& eps) {
    if (a.none() || b.none()) throw std::invalid_argument("pair_uniformity: empty side");
    if (intersects(a, b)) throw std::invalid_argument("pair_uniformity: sides overlap");
    long long asize = a.count(), bsize = b.count();

    UniformityCertificate cert;
    cert.row_threshold = eps * Rational(asize);
    cert.col_threshold = eps * Rational(bsize);

    // One popcount pass per row covers both truth values.
    std::vector<long long> pos(static_cast<std::size_t>(asize));
    {
        std::size_t idx = 0;
        a.for_each([&](int v) { pos[idx++] = count_and(b, g.neighbors(v)); });
    }
    for (int truth : {1, 0}) {
        long long bad_rows = 0;
        for (long long p : pos) {
            long long dissents = truth == 1 ? bsize - p : p;
            if (!lt_scaled(dissents, eps, bsize)) ++bad_rows;
        }
        if (lt_scaled(bad_rows, eps, asize)) {
            cert.pass = true;
            cert.truth = truth;
            cert.row_exceptions = bad_rows;
            return cert;
        }
    }
    return cert;
}

double zeta_of(const Rational& eps) {
    if (eps <= Rational(0) || eps >= Rational(1, 2))
        throw std::invalid_argument("zeta_of: eps must be in (0, 1/2)");
    return std::sqrt(2.0 * eps.to_double());
}

RegularityRecord regular_consequence(const Graph& g, const VertexSet& a, const VertexSet& b,
                                     const Rational& eps, const UniformityCertificate& cert) {
    if (!cert.pass) throw std::invalid_argument("regular_consequence: certificate did not pass");
    RegularityRecord rec;
    rec.zeta = zeta_of(eps);
    rec.truth = cert.truth;
    rec.density = density(g, a, b);

    // gap^2 < 2 eps, exactly; gap is the distance from the nearer extreme.
    Rational gap = cert.truth == 0 ? rec.density : Rational(1) - rec.density;
    __int128 lhs = static_cast<__int128>(gap.num) * gap.num * eps.den;
    __int128 rhs = static_cast<__int128>(2) * eps.num * gap.den * gap.den;
    rec.extreme = lhs < rhs;
    if (!rec.extreme)
        throw std::logic_error("regular_consequence: certified pair lacks extreme density");
    return rec;
}

RegularityOracle brute_force_regular(const Graph& g, const VertexSet& a, const VertexSet& b,
                                     const Rational& eps) {
    std::vector<int> ea = a.to_vector(), eb = b.to_vector();
    int na = static_cast<int>(ea.size()), nb = static_cast<int>(eb.size());
    if (na == 0 || nb == 0) throw std::invalid_argument("brute_force_regular: empty side");
    if (na > 12 || nb > 12) throw std::invalid_argument("oracle scale exceeded");

    std::vector<std::uint32_t> row(na, 0);
    for (int i = 0; i < na; ++i)
        for (int j = 0; j < nb; ++j)
            if (g.adjacent(ea[i], eb[j])) row[i] |= std::uint32_t(1) << j;

    RegularityOracle out;
    out.d_ab = density(g, a, b);

    std::vector<long long> cntb(na);
    std::vector<long long> edges(std::size_t(1) << na);
    for (std::uint32_t mb = 1; mb < (std::uint32_t(1) << nb); ++mb) {
        long long sb = std::popcount(mb);
        if (lt_scaled(sb, eps, nb)) continue;
        for (int i = 0; i < na; ++i) cntb[i] = std::popcount(row[i] & mb);
        edges[0] = 0;
        for (std::uint32_t ma = 1; ma < (std::uint32_t(1) << na); ++ma) {
            int low = std::countr_zero(ma);
            edges[ma] = edges[ma & (ma - 1)] + cntb[low];
            long long sa = std::popcount(ma);
            if (lt_scaled(sa, eps, na)) continue;
            // |edges/(sa sb) - d| >= eps ?
            Rational d(edges[ma], sa * sb);
            Rational diff = d < out.d_ab ? out.d_ab - d : d - out.d_ab;
            if (diff >= eps) {
                VertexSet wa(g.vertex_count()), wb(g.vertex_count());
                for (int i = 0; i < na; ++i)
                    if ((ma >> i) & 1) wa.set(ea[i]);
                for (int j = 0; j < nb; ++j)
                    if ((mb >> j) & 1) wb.set(eb[j]);
                out.bad_a = std::move(wa);
                out.bad_b = std::move(wb);
                out.bad_density = d;
                return out;
            }
        }
    }
    out.regular = true;
    return out;
}

PartitionCheck verify_partition(const Graph& g, const std::vector<VertexSet>& pieces,
                                const Rational& eps, std::optional<Rational> piece_bound) {
    PartitionCheck check;
    if (pieces.empty()) throw std::invalid_argument("verify_partition: no pieces");

    std::vector<VertexSet> ordered = pieces;
    std::sort(ordered.begin(), ordered.end(),
              [](const VertexSet& x, const VertexSet& y) { return x.first() < y.first(); });

    int n = g.vertex_count();
    std::vector<int> owner(n, -1);
    check.disjoint = true;
    for (std::size_t i = 0; i < ordered.size(); ++i)
        ordered[i].for_each([&](int v) {
            if (owner[v] != -1) check.disjoint = false;
            owner[v] = static_cast<int>(i);
        });
    check.covers = std::all_of(owner.begin(), owner.end(), [](int o) { return o != -1; });

    long long mn = ordered.front().count(), mx = mn;
    for (const VertexSet& p : ordered) {
        long long s = p.count();
        mn = std::min(mn, s);
        mx = std::max(mx, s);
    }
    check.equitable = mx - mn <= 1;

    if (piece_bound)
        check.bound_ok = Rational(static_cast<long long>(ordered.size())) <= *piece_bound;

    if (check.disjoint)
    for (std::size_t i = 0; i < ordered.size(); ++i)
        for (std::size_t j = i + 1; j < ordered.size(); ++j) {
            auto cert = pair_uniformity(g, ordered[i], ordered[j], eps);
            PairRecord rec;
            rec.i = static_cast<int>(i);
            rec.j = static_cast<int>(j);
            rec.density = density(g, ordered[i], ordered[j]);
            rec.uniform = cert.pass;
            rec.truth = cert.truth;
            rec.row_exceptions = cert.row_exceptions;
            if (cert.pass) regular_consequence(g, ordered[i], ordered[j], eps, cert);
            else ++check.failing_pairs;
            check.pairs.push_back(rec);
        }

    check.pass = check.disjoint && check.covers && check.equitable && check.bound_ok &&
                 check.failing_pairs == 0;
    return check;
}

}  // namespace stablereg
