#pragma once

#include <cstdint>
#include <vector>

// Combination generators in the three visit orders the engines use, the
// reflected Gray code, and binomial/rank arithmetic.

namespace md {

// Strictly increasing index tuple; every enumeration order shares it.
using Combination = std::vector<uint32_t>;

// Exact binomial coefficient; 0 when q < 0 or q > p. Throws on 64-bit
// overflow (supported up to p = 128 wherever the value itself fits).
uint64_t binomial(uint32_t p, int64_t q);

// Reflected Gray code and the bit flipped between consecutive codes.
inline uint64_t gray_code(uint64_t i) { return i ^ (i >> 1); }
uint32_t gray_diff(uint64_t i); // i >= 1; equals count of trailing zeros

enum class CombOrder { lex, left_lex, unroll };

// Value-semantic cursor; copies advance independently so workers can split
// ranges. Construct via first(); next() returns false once exhausted.
class CombinationCursor {
public:
    static CombinationCursor first(uint32_t k, uint32_t g, CombOrder order);

    const Combination& current() const { return current_; }
    bool exhausted() const { return exhausted_; }
    uint32_t k() const { return k_; }
    uint32_t g() const { return g_; }

    // Advance to the next combination; false (and exhausted) at the end.
    bool next();

private:
    uint32_t k_ = 0;
    uint32_t g_ = 0;
    CombOrder order_ = CombOrder::lex;
    Combination current_;
    bool exhausted_ = false;

    bool next_lex();
    bool next_left_lex();
    bool next_unroll();
};

// Free-function spellings of the cursor operations.
CombinationCursor lex_first(uint32_t k, uint32_t g);
bool lex_next(CombinationCursor& cur);
bool left_lex_next(CombinationCursor& cur);
bool unroll_order_next(CombinationCursor& cur);

// Lex rank of the first q-combination of {0..p-1} with minimum element r+1;
// equivalently the count of q-combinations whose minimum element is <= r.
// C(p,q) - C(p-r-1,q).
uint64_t index_of(uint32_t p, uint32_t q, int64_t r);

// First saved left combination of size a that cannot be extended to a full
// g-combination: C(k,a) - C(g-1,a).
uint64_t left_limit(uint32_t k, uint32_t a, uint32_t g);

// Lex rank of combination c among all subsets of {0..k-1} of size c.size().
uint64_t combination_rank(uint32_t k, const Combination& c);

} // namespace md
