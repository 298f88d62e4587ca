#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <string>
#include <vector>

#include "mindist/cost.hpp"

using namespace md;

namespace {

// Decimal-string bignum: an independent route to the same sums, immune to
// any shared 128-bit arithmetic mistake.
struct Dec {
    std::string digits = "0"; // most significant first

    static Dec from_u64(uint64_t v) { return Dec{std::to_string(v)}; }

    Dec add(const Dec& o) const {
        const std::string& a = digits;
        const std::string& b = o.digits;
        std::string out;
        int i = static_cast<int>(a.size()) - 1, j = static_cast<int>(b.size()) - 1;
        int carry = 0;
        while (i >= 0 || j >= 0 || carry) {
            int s = carry + (i >= 0 ? a[i--] - '0' : 0) + (j >= 0 ? b[j--] - '0' : 0);
            out.push_back(static_cast<char>('0' + s % 10));
            carry = s / 10;
        }
        std::reverse(out.begin(), out.end());
        return Dec{out};
    }

    Dec mul_small(uint64_t f) const {
        if (f == 0 || digits == "0") return Dec{};
        std::string out;
        unsigned long long carry = 0;
        for (int i = static_cast<int>(digits.size()) - 1; i >= 0; --i) {
            unsigned long long cur = static_cast<unsigned long long>(digits[i] - '0') * f + carry;
            out.push_back(static_cast<char>('0' + cur % 10));
            carry = cur / 10;
        }
        while (carry) {
            out.push_back(static_cast<char>('0' + carry % 10));
            carry /= 10;
        }
        std::reverse(out.begin(), out.end());
        return Dec{out};
    }

    // exact division by a small factor; caller guarantees divisibility
    Dec div_small(uint64_t f) const {
        std::string out;
        unsigned long long rem = 0;
        for (char ch : digits) {
            unsigned long long cur = rem * 10 + static_cast<unsigned long long>(ch - '0');
            out.push_back(static_cast<char>('0' + cur / f));
            rem = cur % f;
        }
        REQUIRE(rem == 0);
        size_t nz = out.find_first_not_of('0');
        return Dec{nz == std::string::npos ? "0" : out.substr(nz)};
    }
};

// binomial as a decimal string: product formula with exact stepwise division
Dec dec_binomial(uint32_t p, int64_t q) {
    if (q < 0 || q > p) return Dec{};
    Dec r = Dec::from_u64(1);
    for (int64_t i = 1; i <= q; ++i) {
        r = r.mul_small(static_cast<uint64_t>(p) - static_cast<uint64_t>(q) + static_cast<uint64_t>(i));
        r = r.div_small(static_cast<uint64_t>(i));
    }
    return r;
}

Dec dec_basic(uint32_t k, uint32_t g, uint32_t n) {
    return dec_binomial(k, g).mul_small(g - 1).mul_small(n);
}

Dec dec_optimized(uint32_t k, uint32_t g, uint32_t n) {
    Dec sum;
    for (uint32_t j = g; j <= k; ++j)
        sum = sum.add(dec_binomial(j - 2, static_cast<int64_t>(g) - 2).mul_small(g + k - j - 1));
    return sum.mul_small(n);
}

Dec dec_stack(uint32_t k, uint32_t g, uint32_t n) {
    Dec sum;
    for (uint32_t i = 0; i + 2 <= g; ++i)
        sum = sum.add(dec_binomial(k - i, static_cast<int64_t>(g) - i));
    return sum.mul_small(n);
}

Dec dec_saved(uint32_t k, uint32_t g, uint32_t n, uint32_t s) {
    if (g <= s) return Dec{};
    uint32_t f = (g - 1) / s;
    Dec sum;
    for (uint32_t j = f * s; j <= k - (g - f * s); ++j) {
        // (C(k-j, g-s*f) + f - 1) * C(j-1, f*s-1); the second factor fits
        // u64 across the tested range, so mul_small suffices.
        Dec combos = dec_binomial(k - j, static_cast<int64_t>(g) - static_cast<int64_t>(s) * f)
                         .add(Dec::from_u64(f - 1));
        Dec weight = dec_binomial(j - 1, static_cast<int64_t>(f) * s - 1);
        uint64_t w = 0;
        for (char c : weight.digits) w = w * 10 + static_cast<uint64_t>(c - '0');
        sum = sum.add(combos.mul_small(w));
    }
    return sum.mul_small(n);
}

std::string str(u128 v) { return u128_to_string(v); }

} // namespace

TEST_CASE("u128 checked arithmetic: exact values and overflow errors") {
    CHECK(str(checked_add_u128(1, 2)) == "3");
    u128 big = 1;
    for (int i = 0; i < 127; ++i) big = checked_mul_u128(big, 2);
    CHECK_THROWS_AS(checked_mul_u128(big, 2), std::overflow_error);
    CHECK_THROWS_AS(checked_add_u128(big, big), std::overflow_error);
    CHECK(str(checked_mul_u128(uint64_t{1} << 63, 2)) == "18446744073709551616");
}

TEST_CASE("u128_to_string matches the decimal bignum on products") {
    Dec d = Dec::from_u64(1);
    u128 v = 1;
    for (uint64_t f : {3u, 7u, 11u, 13u, 1000000007u, 998244353u, 4294967295u}) {
        d = d.mul_small(f);
        v = checked_mul_u128(v, f);
        CHECK(str(v) == d.digits);
    }
}

TEST_CASE("binomial_wide agrees with the decimal route across the table range") {
    for (uint32_t p : {50u, 75u, 100u}) {
        for (uint32_t q = 0; q <= 20; ++q)
            CHECK(str(binomial_wide(p, q)) == dec_binomial(p, q).digits);
    }
    CHECK(str(binomial_wide(5, 7)) == "0");
    CHECK(str(binomial_wide(5, -1)) == "0");
}

TEST_CASE("cost formulas: dual-route agreement over the printed table range") {
    for (uint32_t k : {50u, 75u}) {
        for (uint32_t g : {7u, 10u, 15u, 20u}) {
            for (uint32_t n : {1u, 100u}) {
                CHECK(str(cost_basic(k, g, n)) == dec_basic(k, g, n).digits);
                CHECK(str(cost_optimized(k, g, n)) == dec_optimized(k, g, n).digits);
                CHECK(str(cost_stack(k, g, n)) == dec_stack(k, g, n).digits);
                CHECK(str(cost_saved(k, g, n, 5)) == dec_saved(k, g, n, 5).digits);
            }
        }
    }
    // wider sweep at n = 1
    for (uint32_t k = 6; k <= 30; k += 6) {
        for (uint32_t g = 2; g <= 10 && g <= k; ++g) {
            CHECK(str(cost_basic(k, g, 1)) == dec_basic(k, g, 1).digits);
            CHECK(str(cost_optimized(k, g, 1)) == dec_optimized(k, g, 1).digits);
            CHECK(str(cost_stack(k, g, 1)) == dec_stack(k, g, 1).digits);
            for (uint32_t s : {2u, 3u, 5u})
                CHECK(str(cost_saved(k, g, 1, s)) == dec_saved(k, g, 1, s).digits);
        }
    }
}

TEST_CASE("cost anchor values") {
    CHECK(str(cost_brute(10)) == "1023");
    CHECK(str(cost_basic(50, 7, 1)) == "599306400");
    CHECK(str(cost_stack(50, 7, 1)) == "115775055");
    CHECK(str(cost_optimized(50, 7, 1)) == "169803480");
    CHECK(str(cost_saved(50, 7, 1, 5)) == "99884400");
    CHECK(str(cost_saved(50, 5, 1, 5)) == "0"); // g <= s: level scan, no loop XORs
    CHECK(str(cost_basic(5, 2, 1)) == "10");    // C(5,2) * 1
}

TEST_CASE("model-level ordering: stack <= optimized <= basic, saved free below s") {
    for (uint32_t k = 6; k <= 75; ++k) {
        for (uint32_t g = 2; g <= 20 && g <= k; ++g) {
            u128 b = cost_basic(k, g, 1);
            u128 o = cost_optimized(k, g, 1);
            u128 st = cost_stack(k, g, 1);
            CHECK(st <= o);
            CHECK(o <= b);
            // inside the table the level scan replaces every loop XOR
            if (g <= 5) CHECK(cost_saved(k, g, 1, 5) == 0);
        }
    }
    // beyond the table depth the saved model can lose to the stack walk,
    // right where the block count f = floor((g-1)/s) jumps
    CHECK(cost_saved(75, 16, 1, 5) > cost_stack(75, 16, 1));
    CHECK(cost_saved(75, 20, 1, 5) < cost_stack(75, 20, 1));
    CHECK(cost_saved(75, 20, 1, 5) < cost_basic(75, 20, 1));
}

TEST_CASE("render_billions applies the mixed precision with half-away rounding") {
    CHECK(render_billions(599306400) == "0.599");
    CHECK(render_billions(115775055) == "0.116");
    CHECK(render_billions(99884400) == "0.100");
    CHECK(render_billions(0) == "0.000");
    CHECK(render_billions(500000) == "0.001");     // 0.0005 rounds up
    CHECK(render_billions(499999) == "0.000");
    CHECK(render_billions(999500000) == "1.000");  // precision picked before rounding
    CHECK(render_billions(1234567890) == "1.23");
    CHECK(render_billions(1235000000) == "1.24");  // half away from zero
    CHECK(render_billions(92450503530) == "92.45");
    CHECK(render_billions(99995000000) == "100.00");
    CHECK(render_billions(uint64_t{804610959850000000}) == "804610959.9");
    CHECK(render_billions(checked_mul_u128(15260191971u, 1000000000u)) == "15260191971.0");
}

TEST_CASE("cost_table layout: algorithm major, then k, then g") {
    auto t = cost_table({50, 75}, {7, 10}, 1, 5);
    REQUIRE(t.size() == 16);
    const char* algs[4] = {"basic", "optimized", "stack", "saved"};
    size_t idx = 0;
    for (int a = 0; a < 4; ++a) {
        for (uint32_t k : {50u, 75u}) {
            for (uint32_t g : {7u, 10u}) {
                CHECK(t[idx].algorithm == algs[a]);
                CHECK(t[idx].k == k);
                CHECK(t[idx].g == g);
                CHECK(t[idx].n == 1);
                CHECK(t[idx].s == 5);
                CHECK(t[idx].rounded_billions == render_billions(t[idx].additions));
                ++idx;
            }
        }
    }
    CHECK(t[0].additions == cost_basic(50, 7, 1));
}
