#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "mindist/enumeration.hpp"
#include "mindist/f2core.hpp"
#include "mindist/gamma.hpp"

// The six minimum-weight engines with bound bookkeeping, early termination
// and instrumented counters. Counters count row-level XORs; the paper's cost
// formulas carry an extra x n bit factor, so lemma checks compare against
// formula / n.

namespace md {

enum class Algorithm { brute_gray, basic, optimized, stack, saved, saved_unrolled };

const char* algorithm_name(Algorithm a);
Algorithm algorithm_from_name(const std::string& name);

// One (g, Gamma) enumeration round.
struct RoundStats {
    uint32_t g = 0;
    uint32_t gamma_index = 0;
    uint64_t additions = 0;       // row XORs inside the enumeration loop
    uint64_t combinations = 0;    // weight evaluations
    uint64_t accesses = 0;        // saved-table row reads
    uint64_t table_additions = 0; // XORs spent building saved levels this round
    uint64_t messages = 0;        // dynamic-schedule hand-offs (2 per batch)
};

struct WorkStats {
    uint64_t row_additions = 0;
    uint64_t combinations = 0;
    uint64_t row_accesses = 0;
    // Saved-level build XORs stay out of row_additions so the per-round
    // counters match the cost lemmas, which only count the enumeration loop.
    uint64_t table_additions = 0;
    uint64_t messages = 0;
    uint32_t g_final = 0;
    std::vector<RoundStats> per_g;

    void absorb(const RoundStats& rs);
};

class BruteCapError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class MemoryCapError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct EngineConfig {
    Algorithm algorithm = Algorithm::saved;
    uint32_t s = 5;                   // saved-level depth, 1..8
    uint32_t unroll = 2;              // 1..3; saved_unrolled groups this many
    uint32_t permutation_trials = 10; // random permutations tried on top of identity
    uint64_t seed = 0;
    uint32_t workers = 1;
    uint32_t brute_cap = 40;          // max k the brute-force engine accepts
    uint64_t memory_cap_bytes = uint64_t{2} << 30;

    void validate() const; // throws std::invalid_argument on bad fields
};

struct EngineResult {
    uint32_t d = 0;
    WorkStats stats;
};

struct GammaSummary {
    uint32_t m = 0;      // 0 for the brute-force path (no systematization)
    uint32_t k_last = 0;
    uint32_t effective_k = 0; // rank the input was reduced to
};

struct MinWeightResult {
    uint32_t d = 0;
    WorkStats stats;
    GammaSummary gamma;
};

// Per-Gamma table of all row-sum combinations of sizes 1..s, each level in
// lex order of its combinations. Levels build lazily (level l = level l-1
// rows extended by single rows); the constructor pre-checks the full
// s-level memory estimate against the cap.
class SavedAdditions {
public:
    SavedAdditions(const BitMatrix& gamma, uint32_t s, uint64_t memory_cap_bytes);

    static uint64_t estimate_bytes(uint32_t k, uint32_t n, uint32_t s);

    uint32_t k() const { return gamma_->rows(); }
    uint32_t s() const { return s_; }
    const BitMatrix& gamma() const { return *gamma_; }

    // Build levels up to l; returns XORs spent (level 1 is a plain copy).
    uint64_t ensure_level(uint32_t l);

    uint64_t level_size(uint32_t level) const { return rows_[level - 1].size(); }
    const BitVector& row(uint32_t level, uint64_t idx) const { return rows_[level - 1][idx]; }
    uint32_t last_element(uint32_t level, uint64_t idx) const { return last_[level - 1][idx]; }

private:
    const BitMatrix* gamma_;
    uint32_t s_;
    uint32_t built_ = 0;
    std::vector<std::vector<BitVector>> rows_; // rows_[l-1]
    std::vector<std::vector<uint32_t>> last_;  // last combination element per row
};

// Incremental prefix sums for the stack-based engine: entry i holds the XOR
// of the rows indexed by the first i+1 prefix elements; only entries from
// the leftmost changed index on are ever rebuilt.
class AdditionStack {
public:
    AdditionStack(const BitMatrix& gamma, uint32_t depth);

    // Recompute entries level..depth-1 for the given prefix; returns the
    // number of XORs performed (entry 0 is a row copy, not an addition).
    uint64_t rebuild_from(uint32_t level, const Combination& prefix);

    const BitVector& top() const { return entries_.back(); }

private:
    const BitMatrix* gamma_;
    std::vector<BitVector> entries_;
};

// Single (g, Gamma) rounds; return the minimum weight among the enumerated
// combinations and add their work to rs. These are the units the
// counter-vs-lemma tests drive directly.
uint32_t round_basic(const BitMatrix& gamma, uint32_t g, RoundStats& rs);
uint32_t round_optimized(const BitMatrix& gamma, uint32_t g, RoundStats& rs);
uint32_t round_stack(const BitMatrix& gamma, uint32_t g, RoundStats& rs);
uint32_t round_saved(SavedAdditions& sa, uint32_t g, RoundStats& rs);
uint32_t round_saved_unrolled(SavedAdditions& sa, uint32_t g, uint32_t unroll, RoundStats& rs);
// First recursion level dynamically chunked over worker threads.
uint32_t round_saved_parallel(SavedAdditions& sa, uint32_t g, uint32_t workers, RoundStats& rs);

// Shared Brouwer-Zimmermann driver: runs g = 1, 2, ... rounds over all
// Gammas, updates U per round and L per g, stops when L >= U (with the
// per-Gamma fast path when U already sank to L) or g exceeds k.
using RoundRunner = std::function<uint32_t(uint32_t gamma_index, uint32_t g, RoundStats&)>;
EngineResult run_bz_loop(const GammaSet& gs, Bounds bounds, const RoundRunner& round);

// The engines. brute_force_gray enumerates codewords in Gray-code order
// (exactly 2^k - 1 row additions when serial, contiguous block partitioning
// across workers); the bz_* engines walk combination rounds over a GammaSet.
EngineResult brute_force_gray(const BitMatrix& G, const EngineConfig& config);
EngineResult bz_basic(const GammaSet& gs, Bounds bounds, const EngineConfig& config);
EngineResult bz_optimized(const GammaSet& gs, Bounds bounds, const EngineConfig& config);
EngineResult bz_stack(const GammaSet& gs, Bounds bounds, const EngineConfig& config);
EngineResult bz_saved(const GammaSet& gs, Bounds bounds, const EngineConfig& config);
EngineResult bz_saved_unrolled(const GammaSet& gs, Bounds bounds, const EngineConfig& config);

// Front door: row-reduces G to a full-rank basis, builds the GammaSet for
// the BZ engines (permutation search included) and dispatches.
MinWeightResult min_weight(const BitMatrix& G, const EngineConfig& config);

} // namespace md
