#pragma once

#include <cstdint>
#include <vector>

#include "mindist/f2core.hpp"

namespace md {

// splitmix64: the project's single PRNG. Fixed here (rather than mt19937 or
// platform rand) so seeds reproduce bit-identically everywhere.
class SplitMix64 {
public:
    explicit SplitMix64(uint64_t seed) : state_(seed) {}
    uint64_t next() {
        uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

private:
    uint64_t state_;
};

// Fisher-Yates; j = next() % (i+1), documented as part of the seed contract.
template <typename T>
void fisher_yates_shuffle(std::vector<T>& v, SplitMix64& rng) {
    for (size_t i = v.size(); i > 1; --i) {
        size_t j = static_cast<size_t>(rng.next() % i);
        std::swap(v[i - 1], v[j]);
    }
}

std::vector<uint32_t> identity_permutation(uint32_t n);

// Uniform random k x n matrix redrawn until full row rank (k <= n makes
// failures vanishingly rare; bounded retries guard the degenerate cases).
BitMatrix random_full_rank_matrix(uint32_t n, uint32_t k, SplitMix64& rng);

} // namespace md
