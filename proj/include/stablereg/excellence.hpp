#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "stablereg/graph.hpp"
#include "stablereg/rational.hpp"

namespace stablereg {

// Majority opinion of a set under one vertex.  majority is 1 or 0 when the
// minority class is strictly below eps * |set|, otherwise -1 (Split).
struct OpinionSummary {
    int majority = -1;
    long long exceptions = 0;    // size of the minority class when decided
    long long class1 = 0;        // |set n N(v)|
    long long class0 = 0;        // |set \ N(v)|
    Rational threshold;          // eps * |set|
};

// Opinion of A under b; b may lie inside A.
OpinionSummary opinion(const Graph& g, int b, const VertexSet& a, const Rational& eps);

struct GoodnessResult {
    bool good = false;
    int witness = -1;          // a vertex with maximal minority class, if not good
    long long minority = 0;    // its minority class size
};

// A is good when every vertex of G holds a majority opinion in A.
GoodnessResult is_good(const Graph& g, const VertexSet& a, const Rational& eps);

// The value t(a, B): majority class of B under a.  Requires B good; throws
// "opinion undefined" otherwise.
OpinionSummary set_opinion(const Graph& g, int a, const VertexSet& b_set, const Rational& eps);

enum class ExcellenceKind { ExcellentWrtFamily, NotExcellent, ExcellentExact, NotExcellentExact };

struct ExcellenceVerdict {
    ExcellenceKind kind;
    std::optional<VertexSet> witness;  // the splitting good set, when not excellent
    long long class1 = 0;              // |{a in A : t(a,B) = 1}| for the witness
    long long class0 = 0;
};

// Candidate splitting sets tried by find_split_witness, in scan order:
// all singletons (implicit), the explicit sets, then seeded random subsets.
struct WitnessFamily {
    std::vector<VertexSet> explicit_sets;
    // Optional cache, parallel to explicit_sets: the neighbor union of each
    // set.  A set whose neighbor union barely meets A cannot split A, so the
    // scan skips it after one cheap intersection count.
    std::vector<VertexSet> explicit_unions;
    bool explicit_sets_certified_good = false;  // skip the goodness recheck
    int samples_per_size = 0;
    int max_sample_sizes = 8;
};

VertexSet neighbor_union(const Graph& g, const VertexSet& s);

constexpr int kDefaultSamplesPerSize = 64;

WitnessFamily default_family();  // sampler on, no explicit sets

// One opinion class of A under B below eps * |A|?  B must be good; pass
// b_certified_good when the caller already verified that.
ExcellenceVerdict excellent_wrt(const Graph& g, const VertexSet& a, const VertexSet& b_set,
                                const Rational& eps, bool b_certified_good = false);

// First good family member splitting A into two classes of size >= eps * |A|,
// or nullopt when the whole family fails.  Deterministic given seed.
std::optional<ExcellenceVerdict> find_split_witness(const Graph& g, const VertexSet& a,
                                                    const Rational& eps,
                                                    const WitnessFamily& family,
                                                    std::uint64_t seed);

// Exact verdict over every nonempty good B, for n <= 16.
ExcellenceVerdict brute_force_excellent(const Graph& g, const VertexSet& a, const Rational& eps);

}  // namespace stablereg
