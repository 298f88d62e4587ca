#pragma once

#include <cstdint>
#include <string>
#include <vector>

// Closed-form addition-count model for the engines. All arithmetic is exact:
// 128-bit integers with explicit overflow checks that throw instead of
// wrapping; floating point never appears, the billions rendering is integer
// string work.

namespace md {

using u128 = unsigned __int128;

u128 checked_add_u128(u128 a, u128 b);
u128 checked_mul_u128(u128 a, u128 b);
std::string u128_to_string(u128 v);

// Exact binomial in 128 bits (the 64-bit binomial() in enumeration.hpp is
// for ranks and loop bounds; the cost sums outgrow it first).
u128 binomial_wide(uint32_t p, int64_t q);

// Row additions of the Gray-code brute force: 2^k - 1.
u128 cost_brute(uint32_t k);

// Bit additions (includes the x n factor) per enumeration round.
u128 cost_basic(uint32_t k, uint32_t g, uint32_t n);
u128 cost_optimized(uint32_t k, uint32_t g, uint32_t n);
u128 cost_stack(uint32_t k, uint32_t g, uint32_t n);
u128 cost_saved(uint32_t k, uint32_t g, uint32_t n, uint32_t s);

// Value in units of 10^9 rounded half away from zero: three decimals below
// 1, two below 100, one at or above 100 (the printed table's mixed
// precision).
std::string render_billions(u128 additions);

struct CostReport {
    std::string algorithm;
    uint32_t k = 0;
    uint32_t g = 0;
    uint32_t n = 1;
    uint32_t s = 5;
    u128 additions = 0;
    std::string rounded_billions;
};

// Reports for basic/optimized/stack/saved over the cross product of the
// requested k and g values, in table order (algorithm major, k, then g).
std::vector<CostReport> cost_table(const std::vector<uint32_t>& k_list,
                                   const std::vector<uint32_t>& g_list,
                                   uint32_t n, uint32_t s);

} // namespace md
