#pragma once

#include <optional>
#include <vector>

#include "stablereg/graph.hpp"
#include "stablereg/rational.hpp"

namespace stablereg {

// Certificate that one truth value describes almost all of A x B: fewer than
// eps|A| rows of A carry eps|B| or more dissenting columns.
struct UniformityCertificate {
    bool pass = false;
    int truth = -1;               // 1 or 0 when passed
    long long row_exceptions = 0; // rows with too many dissents, for the passing truth
    Rational row_threshold;       // eps * |A|
    Rational col_threshold;       // eps * |B|
};

// Tries truth values 1 then 0; passes with the first that meets both bounds.
UniformityCertificate pair_uniformity(const Graph& g, const VertexSet& a, const VertexSet& b,
                                      const Rational& eps);

// sqrt(2 eps), for reporting only; verdicts compare squared rationals.
double zeta_of(const Rational& eps);

struct RegularityRecord {
    double zeta = 0;
    Rational density;
    int truth = -1;
    bool extreme = false;  // density below zeta (truth 0) or above 1 - zeta (truth 1)
};

// Consequence of a passing certificate: the pair's density is extreme.
// A failed extremality check throws; it would mean an implementation bug.
RegularityRecord regular_consequence(const Graph& g, const VertexSet& a, const VertexSet& b,
                                     const Rational& eps, const UniformityCertificate& cert);

struct RegularityOracle {
    bool regular = false;
    Rational d_ab;
    std::optional<VertexSet> bad_a, bad_b;  // violating subset pair, if any
    Rational bad_density;
};

// Exact check of the standard regularity definition; |A|, |B| <= 12.
RegularityOracle brute_force_regular(const Graph& g, const VertexSet& a, const VertexSet& b,
                                     const Rational& eps);

struct PairRecord {
    int i = 0, j = 0;
    Rational density;
    bool uniform = false;
    int truth = -1;
    long long row_exceptions = 0;
};

struct PartitionCheck {
    bool pass = false;
    bool disjoint = false;
    bool covers = false;
    bool equitable = false;
    bool bound_ok = true;
    long long failing_pairs = 0;
    std::vector<PairRecord> pairs;  // all unordered pairs, pieces ordered by smallest member
};

// Certifies every pair of pieces, plus the partition shape.  piece_bound, when
// given, is the maximum admissible piece count.
PartitionCheck verify_partition(const Graph& g, const std::vector<VertexSet>& pieces,
                                const Rational& eps,
                                std::optional<Rational> piece_bound = std::nullopt);

}  // namespace stablereg
