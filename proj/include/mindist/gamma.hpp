#pragma once

#include <cstdint>
#include <vector>

#include "mindist/f2core.hpp"

// Systematization of a generator matrix into m Gamma matrices over disjoint
// information sets, the random-permutation search over them, and the bound
// formulas of the Brouwer-Zimmermann loop.

namespace md {

struct GammaSet {
    std::vector<BitMatrix> gammas;  // each k x n
    std::vector<uint32_t> ranks;    // k for the first m-1 entries, k_last for the last
    uint32_t k_last = 0;
    // column_perm[j] = original column of stored column j; shared by all gammas.
    std::vector<uint32_t> column_perm;

    uint32_t m() const { return static_cast<uint32_t>(gammas.size()); }
    uint32_t k() const { return gammas.empty() ? 0 : gammas[0].rows(); }
    uint32_t n() const { return gammas.empty() ? 0 : gammas[0].cols(); }
};

struct Bounds {
    uint32_t lower = 1;
    uint32_t upper = 0;
};

// Progressive block diagonalization of a full-row-rank G. Gamma j (j < m-1)
// holds the k x k identity in columns j*k .. j*k+k-1; the last Gamma holds
// (B | [I_k_last; 0] | [A; 0]). Column swaps stay within the block being
// processed and are recorded in column_perm. Throws on rank-deficient input.
GammaSet compute_gamma_matrices(const BitMatrix& G);

// Evaluates the identity permutation plus `trials` seeded random column
// permutations and keeps the GammaSet maximizing (m, k_last) lexicographically,
// earliest winner on ties. Deterministic for a fixed seed (splitmix64 +
// Fisher-Yates; see util.hpp).
GammaSet best_gamma_over_permutations(const BitMatrix& G, uint32_t trials, uint64_t seed);

// Lower bound after finishing round g: (m-1)(g+1) + max(0, g+1-k+k_last).
uint32_t lower_bound(uint32_t m, uint32_t g, uint32_t k, uint32_t k_last);

// Singleton bound n - k + 1, the starting upper bound.
uint32_t singleton_upper(uint32_t n, uint32_t k);

// Undo the recorded permutation: output column column_perm[j] = stored column j.
BitMatrix unpermute_columns(const BitMatrix& m, const std::vector<uint32_t>& column_perm);

// Apply a permutation: output column j = input column perm[j].
BitMatrix permute_columns(const BitMatrix& m, const std::vector<uint32_t>& perm);

} // namespace md
