#include "mindist/gamma.hpp"

#include <algorithm>
#include <stdexcept>

#include "mindist/util.hpp"

namespace md {

std::vector<uint32_t> identity_permutation(uint32_t n) {
    std::vector<uint32_t> p(n);
    for (uint32_t i = 0; i < n; ++i) p[i] = i;
    return p;
}

BitMatrix permute_columns(const BitMatrix& m, const std::vector<uint32_t>& perm) {
    BitMatrix out(m.rows(), m.cols());
    for (uint32_t j = 0; j < m.cols(); ++j)
        for (uint32_t r = 0; r < m.rows(); ++r)
            if (m.get(r, perm[j])) out.set(r, j, true);
    return out;
}

BitMatrix unpermute_columns(const BitMatrix& m, const std::vector<uint32_t>& column_perm) {
    BitMatrix out(m.rows(), m.cols());
    for (uint32_t j = 0; j < m.cols(); ++j)
        for (uint32_t r = 0; r < m.rows(); ++r)
            if (m.get(r, j)) out.set(r, column_perm[j], true);
    return out;
}

GammaSet compute_gamma_matrices(const BitMatrix& G) {
    const uint32_t k = G.rows();
    const uint32_t n = G.cols();
    if (k == 0 || k > n)
        throw std::invalid_argument("compute_gamma_matrices: need 1 <= k <= n");
    if (rank_of(G) != k)
        throw std::invalid_argument("compute_gamma_matrices: rank-deficient generator matrix");

    GammaSet gs;
    gs.column_perm = identity_permutation(n);
    BitMatrix w = G;

    for (uint32_t offset = 0; offset < n; offset += k) {
        uint32_t block_rank = 0;
        for (; block_rank < k; ++block_rank) {
            uint32_t target = offset + block_rank;
            if (target >= n) break;
            // First workable column, first row with a nonzero entry in it.
            uint32_t pc = n, pr = k;
            for (uint32_t c = target; c < n && pc == n; ++c)
                for (uint32_t r = block_rank; r < k; ++r)
                    if (w.get(r, c)) { pc = c; pr = r; break; }
            if (pc == n) break;
            if (pc != target) {
                w.swap_cols(target, pc);
                std::swap(gs.column_perm[target], gs.column_perm[pc]);
                // Keep earlier snapshots on the same shared column order;
                // both columns sit past their identity blocks.
                for (auto& snap : gs.gammas) snap.swap_cols(target, pc);
            }
            if (pr != block_rank) w.swap_rows(block_rank, pr);
            for (uint32_t r = 0; r < k; ++r)
                if (r != block_rank && w.get(r, target))
                    xor_into(w.row(r), w.row(block_rank));
        }
        if (block_rank == 0) break; // residual columns carry no new information
        gs.gammas.push_back(w);
        gs.ranks.push_back(block_rank);
        if (block_rank < k) break; // partial block is always the last one
    }

    gs.k_last = gs.ranks.back();
    return gs;
}

GammaSet best_gamma_over_permutations(const BitMatrix& G, uint32_t trials, uint64_t seed) {
    if (trials < 1)
        throw std::invalid_argument("best_gamma_over_permutations: trials must be >= 1");

    GammaSet best = compute_gamma_matrices(G); // identity permutation always included
    SplitMix64 rng(seed);
    for (uint32_t t = 0; t < trials; ++t) {
        std::vector<uint32_t> perm = identity_permutation(G.cols());
        fisher_yates_shuffle(perm, rng);
        GammaSet cand = compute_gamma_matrices(permute_columns(G, perm));
        for (uint32_t j = 0; j < cand.column_perm.size(); ++j)
            cand.column_perm[j] = perm[cand.column_perm[j]];
        if (cand.m() > best.m() ||
            (cand.m() == best.m() && cand.k_last > best.k_last))
            best = std::move(cand);
    }
    return best;
}

uint32_t lower_bound(uint32_t m, uint32_t g, uint32_t k, uint32_t k_last) {
    int64_t partial = static_cast<int64_t>(g) + 1 - static_cast<int64_t>(k) + k_last;
    if (partial < 0) partial = 0;
    return (m - 1) * (g + 1) + static_cast<uint32_t>(partial);
}

uint32_t singleton_upper(uint32_t n, uint32_t k) {
    if (k < 1 || n < k)
        throw std::invalid_argument("singleton_upper: need n >= k >= 1");
    return n - k + 1;
}

BitMatrix random_full_rank_matrix(uint32_t n, uint32_t k, SplitMix64& rng) {
    if (k < 1 || k > n)
        throw std::invalid_argument("random_full_rank_matrix: need 1 <= k <= n");
    for (int attempt = 0; attempt < 256; ++attempt) {
        BitMatrix m(k, n);
        for (uint32_t r = 0; r < k; ++r) {
            for (uint32_t w = 0; w < m.row(r).word_count(); ++w)
                m.row(r).words()[w] = static_cast<uint32_t>(rng.next());
            m.row(r).mask_padding();
        }
        if (rank_of(m) == k) return m;
    }
    throw std::runtime_error("random_full_rank_matrix: failed to reach full rank");
}

} // namespace md
