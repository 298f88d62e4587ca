#include "mindist/f2core.hpp"

#include <bit>
#include <stdexcept>

namespace md {

void BitMatrix::swap_cols(uint32_t a, uint32_t b) {
    if (a == b) return;
    for (uint32_t r = 0; r < rows_; ++r) {
        bool va = data_[r].get(a);
        bool vb = data_[r].get(b);
        data_[r].set(a, vb);
        data_[r].set(b, va);
    }
}

void xor_into(BitVector& dst, const BitVector& src) {
    if (dst.length() != src.length())
        throw std::invalid_argument("xor_into: length mismatch");
    uint32_t* d = dst.words();
    const uint32_t* s = src.words();
    for (uint32_t i = 0, wc = dst.word_count(); i < wc; ++i) d[i] ^= s[i];
}

uint32_t weight(const BitVector& v) {
    uint32_t total = 0;
    const uint32_t* w = v.words();
    for (uint32_t i = 0, wc = v.word_count(); i < wc; ++i)
        total += static_cast<uint32_t>(std::popcount(w[i]));
    return total;
}

uint32_t weight_of_xor(const BitVector& a, const BitVector& b) {
    if (a.length() != b.length())
        throw std::invalid_argument("weight_of_xor: length mismatch");
    uint32_t total = 0;
    const uint32_t* wa = a.words();
    const uint32_t* wb = b.words();
    for (uint32_t i = 0, wc = a.word_count(); i < wc; ++i)
        total += static_cast<uint32_t>(std::popcount(wa[i] ^ wb[i]));
    return total;
}

BitVector combine_rows(const BitMatrix& m, const std::vector<uint32_t>& c) {
    if (c.empty())
        throw std::invalid_argument("combine_rows: empty combination");
    for (size_t i = 0; i < c.size(); ++i) {
        if (c[i] >= m.rows())
            throw std::invalid_argument("combine_rows: index out of range");
        if (i > 0 && c[i] <= c[i - 1])
            throw std::invalid_argument("combine_rows: indices not strictly increasing");
    }
    BitVector acc = m.row(c[0]);
    for (size_t i = 1; i < c.size(); ++i) xor_into(acc, m.row(c[i]));
    return acc;
}

namespace {

// Gaussian elimination to reduced row echelon form, in place.
// Returns the rank; rows below it end up zero.
uint32_t rref_in_place(BitMatrix& w) {
    uint32_t rank = 0;
    for (uint32_t col = 0; col < w.cols() && rank < w.rows(); ++col) {
        uint32_t pivot = rank;
        while (pivot < w.rows() && !w.get(pivot, col)) ++pivot;
        if (pivot == w.rows()) continue;
        w.swap_rows(rank, pivot);
        for (uint32_t r = 0; r < w.rows(); ++r)
            if (r != rank && w.get(r, col)) xor_into(w.row(r), w.row(rank));
        ++rank;
    }
    return rank;
}

} // namespace

uint32_t rank_of(const BitMatrix& m) {
    BitMatrix w = m;
    return rref_in_place(w);
}

BitMatrix rref_of(const BitMatrix& m) {
    BitMatrix w = m;
    uint32_t rank = rref_in_place(w);
    BitMatrix out(rank, m.cols());
    for (uint32_t r = 0; r < rank; ++r) out.row(r) = w.row(r);
    return out;
}

BitMatrix row_basis(const BitMatrix& m) {
    BitMatrix basis = rref_of(m);
    if (basis.rows() == 0)
        throw std::invalid_argument("row_basis: zero matrix spans the zero code");
    return basis;
}

} // namespace md
