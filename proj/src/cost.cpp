#include "mindist/cost.hpp"

#include <algorithm>
#include <stdexcept>

namespace md {

namespace {
constexpr u128 U128_MAX = ~static_cast<u128>(0);
constexpr uint64_t BILLION = 1000000000ull;
} // namespace

u128 checked_add_u128(u128 a, u128 b) {
    if (a > U128_MAX - b) throw std::overflow_error("cost arithmetic overflow");
    return a + b;
}

u128 checked_mul_u128(u128 a, u128 b) {
    if (a != 0 && b > U128_MAX / a) throw std::overflow_error("cost arithmetic overflow");
    return a * b;
}

std::string u128_to_string(u128 v) {
    if (v == 0) return "0";
    std::string s;
    while (v > 0) {
        s.push_back(static_cast<char>('0' + static_cast<unsigned>(v % 10)));
        v /= 10;
    }
    std::reverse(s.begin(), s.end());
    return s;
}

u128 binomial_wide(uint32_t p, int64_t q) {
    if (q < 0 || q > static_cast<int64_t>(p)) return 0;
    uint64_t qq = static_cast<uint64_t>(q);
    if (qq > p - qq) qq = p - qq;
    u128 c = 1;
    for (uint64_t i = 1; i <= qq; ++i)
        c = checked_mul_u128(c, p - qq + i) / i; // divides exactly at each step
    return c;
}

u128 cost_brute(uint32_t k) {
    if (k < 1 || k > 127)
        throw std::invalid_argument("cost_brute: need 1 <= k <= 127");
    return (static_cast<u128>(1) << k) - 1;
}

u128 cost_basic(uint32_t k, uint32_t g, uint32_t n) {
    if (g < 1 || g > k) throw std::invalid_argument("cost_basic: need 1 <= g <= k");
    return checked_mul_u128(checked_mul_u128(binomial_wide(k, g), g - 1), n);
}

u128 cost_optimized(uint32_t k, uint32_t g, uint32_t n) {
    if (g < 1 || g > k) throw std::invalid_argument("cost_optimized: need 1 <= g <= k");
    if (g == 1) return 0; // single rows, no additions
    u128 sum = 0;
    for (uint32_t j = g; j <= k; ++j) {
        u128 term = checked_mul_u128(binomial_wide(j - 2, static_cast<int64_t>(g) - 2),
                                     g + k - j - 1);
        sum = checked_add_u128(sum, term);
    }
    return checked_mul_u128(sum, n);
}

u128 cost_stack(uint32_t k, uint32_t g, uint32_t n) {
    if (g < 1 || g > k) throw std::invalid_argument("cost_stack: need 1 <= g <= k");
    u128 sum = 0;
    for (uint32_t i = 0; i + 2 <= g; ++i)
        sum = checked_add_u128(sum, binomial_wide(k - i, static_cast<int64_t>(g) - i));
    return checked_mul_u128(sum, n);
}

u128 cost_saved(uint32_t k, uint32_t g, uint32_t n, uint32_t s) {
    if (g < 1 || g > k) throw std::invalid_argument("cost_saved: need 1 <= g <= k");
    if (s < 1) throw std::invalid_argument("cost_saved: need s >= 1");
    if (g <= s) return 0; // fully precomputed levels, no additions in the round
    uint32_t f = (g - 1) / s;
    u128 sum = 0;
    for (uint32_t j = f * s; j <= k - (g - f * s); ++j) {
        u128 ways_last = binomial_wide(k - j, static_cast<int64_t>(g) - s * f);
        u128 factor = checked_add_u128(ways_last, f - 1);
        u128 ways_prefix = binomial_wide(j - 1, static_cast<int64_t>(f) * s - 1);
        sum = checked_add_u128(sum, checked_mul_u128(factor, ways_prefix));
    }
    return checked_mul_u128(sum, n);
}

std::string render_billions(u128 additions) {
    uint32_t decimals;
    if (additions < BILLION) decimals = 3;
    else if (additions < static_cast<u128>(100) * BILLION) decimals = 2;
    else decimals = 1;

    u128 scale = 1;
    for (uint32_t i = 0; i < decimals; ++i) scale *= 10;
    // round(additions * scale / 1e9), half away from zero
    u128 scaled = checked_add_u128(checked_mul_u128(additions, scale), BILLION / 2);
    u128 rounded = scaled / BILLION;

    std::string integral = u128_to_string(rounded / scale);
    std::string frac = u128_to_string(rounded % scale);
    while (frac.size() < decimals) frac.insert(frac.begin(), '0');
    return integral + "." + frac;
}

std::vector<CostReport> cost_table(const std::vector<uint32_t>& k_list,
                                   const std::vector<uint32_t>& g_list,
                                   uint32_t n, uint32_t s) {
    struct Algo {
        const char* name;
        u128 (*eval)(uint32_t, uint32_t, uint32_t, uint32_t);
    };
    static const Algo algos[] = {
        {"basic", [](uint32_t k, uint32_t g, uint32_t nn, uint32_t) { return cost_basic(k, g, nn); }},
        {"optimized", [](uint32_t k, uint32_t g, uint32_t nn, uint32_t) { return cost_optimized(k, g, nn); }},
        {"stack", [](uint32_t k, uint32_t g, uint32_t nn, uint32_t) { return cost_stack(k, g, nn); }},
        {"saved", [](uint32_t k, uint32_t g, uint32_t nn, uint32_t ss) { return cost_saved(k, g, nn, ss); }},
    };

    std::vector<CostReport> out;
    for (const auto& algo : algos) {
        for (uint32_t k : k_list) {
            for (uint32_t g : g_list) {
                CostReport r;
                r.algorithm = algo.name;
                r.k = k;
                r.g = g;
                r.n = n;
                r.s = s;
                r.additions = algo.eval(k, g, n, s);
                r.rounded_billions = render_billions(r.additions);
                out.push_back(std::move(r));
            }
        }
    }
    return out;
}

} // namespace md
