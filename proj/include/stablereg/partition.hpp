#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "stablereg/excellence.hpp"
#include "stablereg/graph.hpp"
#include "stablereg/verify.hpp"
#include "stablereg/witness.hpp"

namespace stablereg {

// Pipeline constants derived from (n, eps, t): alpha = eps/4, beta = eps/3,
// q = ceil(1/alpha), c maximal with q^{t-1} c in (alpha n/2 - q^{t-1}, alpha n/2],
// piece sizes s_l = q^{t-1-l} c.
struct PipelineParams {
    long long n = 0;
    Rational eps;
    int t = 0;
    Rational alpha, beta;
    long long q = 0;
    long long c = 0;
    std::vector<long long> sizes;  // s_0 .. s_{t-1}
    std::uint64_t seed = 0;
    int max_retries = 16;
};

struct SizeSequence {
    long long q = 0;
    long long c = 0;
    std::vector<long long> sizes;
};

// The constant arithmetic alone, without admissibility checks.
SizeSequence size_sequence(long long n, const Rational& eps, int t);

// Throws "epsilon too large for tree bound" when eps >= 1/2^t and
// "insufficient n for Step 4(i)" when alpha^2 n/4 - 1 <= max{t, 3/eps}.
PipelineParams make_params(long long n, const Rational& eps, int t, std::uint64_t seed = 0,
                           int max_retries = 16);

struct PipelineConfig {
    std::uint64_t seed = 0;
    int max_retries = 16;
    std::uint64_t budget = kDefaultBudget;
    int tree_cap = 6;            // auto mode probes heights 1..tree_cap
    int samples_per_size = 0;    // sampled split candidates during certification
};

// Raised when the excellence descent would pass depth t; carries the verified
// height-t configuration that such a run constructs.
struct TreeBoundViolation : std::runtime_error {
    SpecialTreeWitness tree;
    explicit TreeBoundViolation(SpecialTreeWitness w)
        : std::runtime_error("excellence descent exceeded the tree bound"), tree(std::move(w)) {}
};

struct ExtractResult {
    VertexSet piece;
    int depth = 0;                         // splits along the returned path
    std::vector<std::string> provenance;   // human-readable split log
    bool inconclusive = false;             // a witness search hit its budget
};

// Subset of A of size sizes[l] for some l, certified: no family member splits
// it at threshold alpha.  Requires |A| >= max{s_0, 1/eps^t}.
ExtractResult extract_excellent(const Graph& g, const VertexSet& a, const PipelineParams& params,
                                const WitnessFamily& family, std::uint64_t seed);

// Exact-quantifier extraction at oracle scale (n <= 16): the largest subset
// of A that brute_force_excellent certifies, scanning sizes downward from
// |A| and stopping at ceil(eps^{t-1} |A|).  Requires |A| >= 1/eps^t.
VertexSet extract_excellent_exact(const Graph& g, const VertexSet& a, const Rational& eps, int t);

struct CoverResult {
    std::vector<ExtractResult> pieces;
    VertexSet remainder;
};

// Repeated extraction until fewer than s_0 vertices remain; each new piece
// joins the witness family for later extractions.
CoverResult greedy_cover(const Graph& g, const PipelineParams& params,
                         const PipelineConfig& config);

struct RefineError : std::runtime_error {
    VertexSet failing_piece;
    VertexSet witness;
    explicit RefineError(VertexSet piece, VertexSet w)
        : std::runtime_error("refinement retries exhausted"),
          failing_piece(std::move(piece)), witness(std::move(w)) {}
};

struct RefineResult {
    std::vector<VertexSet> pieces;  // |piece|/c blocks of size exactly c
    int attempts = 1;               // shuffles consumed, including the successful one
};

// Random equal split into size-c blocks, each certified zeta-excellent with
// respect to the family; reshuffles on failure up to max_retries.
RefineResult random_refine(const Graph& g, const VertexSet& piece, long long c,
                           const Rational& zeta, const WitnessFamily& family, std::uint64_t seed,
                           int max_retries);

struct Partition {
    std::vector<VertexSet> pieces;
    std::vector<std::string> provenance;  // one entry per piece
    std::uint64_t seed = 0;
};

// Round-robin distribution of the remainder (must be smaller than s_0) over
// the pieces in index order; every augmented piece is re-certified at eps.
Partition distribute_remainder(const Graph& g, const std::vector<VertexSet>& pieces,
                               const VertexSet& remainder, const PipelineParams& params,
                               const PipelineConfig& config);

enum class TreeBoundMode { Auto, Fixed, FromK };

struct BudgetExhausted : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Auto mode found a tree at every admissible height; no (t, eps) pair works.
struct NoAdmissibleTreeBound : std::runtime_error {
    SpecialTreeWitness tree;  // the deepest Found configuration
    NoAdmissibleTreeBound(const std::string& msg, SpecialTreeWitness w)
        : std::runtime_error(msg), tree(std::move(w)) {}
};

struct PipelineReport {
    PipelineParams params;
    Rational exact_bound;    // 4 q^{t-1} / alpha
    Rational nominal_bound;  // 4 (8/eps)^{t-2}
    long long piece_count = 0;
    int total_refine_attempts = 0;
    int refine_escalations = 0;  // pieces refined at the relaxed threshold
    Rational relaxed_zeta;       // (eps (c+1) - 1)/c, still passes the final eps check
    long long remainder_size = 0;
    int tree_bound_t = 0;
    std::vector<SpecialTreeSearch> tree_levels;  // auto mode probe results
    PartitionCheck check;
};

// The full pipeline: tree bound, constants, cover, refine, distribute, verify.
std::pair<Partition, PipelineReport> stable_partition(const Graph& g, const Rational& eps,
                                                      TreeBoundMode mode, int t_or_k,
                                                      const PipelineConfig& config);

struct TheoremBound {
    Rational exact;    // 4 q^{t-1} / alpha
    Rational nominal;  // 4 (8/eps)^{t-2}
};

TheoremBound theorem_bound(const Rational& eps, int t);

struct TsrReport {
    Rational eps_prime;          // eps^2 / 2, the uniformity threshold used
    double zeta = 0;             // recovered regularity parameter, equals eps
    long long bound_exponent = 0;  // piece bound is (4/eps)^exponent
    PipelineReport pipeline;
};

// Regularity wrapper: runs the pipeline at eps' = eps^2/2 so certified pairs
// are eps-regular with density below eps or above 1 - eps.  practical = true
// replaces the k-derived tree bound with the empirical one.
std::pair<Partition, TsrReport> tsr_partition(const Graph& g, const Rational& eps, int k,
                                              bool practical, const PipelineConfig& config);

}  // namespace stablereg
