#include "mindist/enumeration.hpp"

#include <bit>
#include <limits>
#include <stdexcept>

namespace md {

uint64_t binomial(uint32_t p, int64_t q) {
    if (q < 0 || q > static_cast<int64_t>(p)) return 0;
    uint64_t qq = static_cast<uint64_t>(q);
    if (qq > p - qq) qq = p - qq;
    unsigned __int128 c = 1;
    for (uint64_t i = 1; i <= qq; ++i) {
        c = c * (p - qq + i) / i; // divides exactly at every step
        if (c > std::numeric_limits<uint64_t>::max())
            throw std::overflow_error("binomial: value exceeds 64 bits");
    }
    return static_cast<uint64_t>(c);
}

uint32_t gray_diff(uint64_t i) {
    if (i == 0) throw std::invalid_argument("gray_diff: i must be >= 1");
    return static_cast<uint32_t>(std::countr_zero(i));
}

CombinationCursor CombinationCursor::first(uint32_t k, uint32_t g, CombOrder order) {
    if (g < 1 || g > k)
        throw std::invalid_argument("CombinationCursor: need 1 <= g <= k");
    CombinationCursor cur;
    cur.k_ = k;
    cur.g_ = g;
    cur.order_ = order;
    cur.current_.resize(g);
    for (uint32_t i = 0; i < g; ++i) cur.current_[i] = i;
    return cur;
}

bool CombinationCursor::next() {
    if (exhausted_)
        throw std::logic_error("CombinationCursor: advanced past the end");
    bool ok = false;
    switch (order_) {
        case CombOrder::lex:      ok = next_lex(); break;
        case CombOrder::left_lex: ok = next_left_lex(); break;
        case CombOrder::unroll:   ok = next_unroll(); break;
    }
    if (!ok) exhausted_ = true;
    return ok;
}

bool CombinationCursor::next_lex() {
    // Rightmost element that can still grow; everything after restarts tight.
    for (uint32_t i = g_; i-- > 0;) {
        if (current_[i] < k_ - g_ + i) {
            ++current_[i];
            for (uint32_t j = i + 1; j < g_; ++j)
                current_[j] = current_[j - 1] + 1;
            return true;
        }
    }
    return false;
}

bool CombinationCursor::next_left_lex() {
    // Colexicographic: the largest elements change slowest. Bump the lowest
    // element with slack and restart everything below it at (0,1,...).
    for (uint32_t i = 0; i < g_; ++i) {
        uint32_t ceiling = (i + 1 < g_) ? current_[i + 1] : k_;
        if (current_[i] + 1 < ceiling) {
            ++current_[i];
            for (uint32_t j = 0; j < i; ++j) current_[j] = j;
            return true;
        }
    }
    return false;
}

bool CombinationCursor::next_unroll() {
    // First element slowest, then the last element, then the middle g-2
    // indices lexicographically inside the open interval.
    if (g_ == 1) {
        if (current_[0] + 1 >= k_) return false;
        ++current_[0];
        return true;
    }
    uint32_t f = current_[0];
    uint32_t l = current_[g_ - 1];
    // Middle successor in lex over {f+1 .. l-1} choose g-2.
    for (uint32_t i = g_ - 1; i-- > 1;) {
        if (current_[i] < l - (g_ - 1 - i)) {
            ++current_[i];
            for (uint32_t j = i + 1; j < g_ - 1; ++j)
                current_[j] = current_[j - 1] + 1;
            return true;
        }
    }
    if (l + 1 < k_) {
        ++l;
    } else if (f + 1 <= k_ - g_) {
        ++f;
        l = f + g_ - 1;
    } else {
        return false;
    }
    current_[0] = f;
    for (uint32_t j = 1; j + 1 < g_; ++j) current_[j] = f + j;
    current_[g_ - 1] = l;
    return true;
}

CombinationCursor lex_first(uint32_t k, uint32_t g) {
    return CombinationCursor::first(k, g, CombOrder::lex);
}

bool lex_next(CombinationCursor& cur) { return cur.next(); }
bool left_lex_next(CombinationCursor& cur) { return cur.next(); }
bool unroll_order_next(CombinationCursor& cur) { return cur.next(); }

uint64_t index_of(uint32_t p, uint32_t q, int64_t r) {
    int64_t rest = static_cast<int64_t>(p) - r - 1;
    uint64_t tail = rest < 0 ? 0 : binomial(static_cast<uint32_t>(rest), q);
    return binomial(p, q) - tail;
}

uint64_t left_limit(uint32_t k, uint32_t a, uint32_t g) {
    return binomial(k, a) - binomial(g - 1, a);
}

uint64_t combination_rank(uint32_t k, const Combination& c) {
    uint64_t rank = 0;
    uint32_t a = static_cast<uint32_t>(c.size());
    uint32_t lo = 0;
    for (uint32_t i = 0; i < a; ++i) {
        if (c[i] >= k || (i > 0 && c[i] <= c[i - 1]))
            throw std::invalid_argument("combination_rank: not a valid combination");
        for (uint32_t v = lo; v < c[i]; ++v)
            rank += binomial(k - 1 - v, static_cast<int64_t>(a) - 1 - i);
        lo = c[i] + 1;
    }
    return rank;
}

} // namespace md
