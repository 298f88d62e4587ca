#pragma once

#include <cstdint>
#include <vector>

// Bit-packed linear algebra over F2. Vectors pack bit i into word i/32 at
// position i%32 (little-endian within the word); 32-bit words are a fixed
// choice so serialized dumps stay reproducible across platforms. Padding
// bits past position n-1 are kept zero by every operation, so weight()
// never has to mask.

namespace md {

class BitVector {
public:
    BitVector() = default;
    explicit BitVector(uint32_t length)
        : length_(length), words_((length + 31) / 32, 0u) {}

    uint32_t length() const { return length_; }
    uint32_t word_count() const { return static_cast<uint32_t>(words_.size()); }
    const uint32_t* words() const { return words_.data(); }
    uint32_t* words() { return words_.data(); }

    bool get(uint32_t i) const {
        return (words_[i >> 5] >> (i & 31)) & 1u;
    }
    void set(uint32_t i, bool v) {
        uint32_t mask = 1u << (i & 31);
        if (v) words_[i >> 5] |= mask;
        else   words_[i >> 5] &= ~mask;
    }

    // Mask for the valid bits of the last word; all-ones when n%32 == 0.
    uint32_t last_word_mask() const {
        uint32_t rem = length_ & 31;
        return rem == 0 ? ~0u : (1u << rem) - 1u;
    }
    void mask_padding() {
        if (!words_.empty()) words_.back() &= last_word_mask();
    }

    bool is_zero() const {
        for (uint32_t w : words_) if (w != 0) return false;
        return true;
    }

    bool operator==(const BitVector& o) const {
        return length_ == o.length_ && words_ == o.words_;
    }

private:
    uint32_t length_ = 0;
    std::vector<uint32_t> words_;
};

struct BitMatrix {
    BitMatrix() = default;
    BitMatrix(uint32_t rows, uint32_t cols)
        : rows_(rows), cols_(cols), data_(rows, BitVector(cols)) {}

    uint32_t rows() const { return rows_; }
    uint32_t cols() const { return cols_; }
    BitVector& row(uint32_t r) { return data_[r]; }
    const BitVector& row(uint32_t r) const { return data_[r]; }

    bool get(uint32_t r, uint32_t c) const { return data_[r].get(c); }
    void set(uint32_t r, uint32_t c, bool v) { data_[r].set(c, v); }

    void swap_rows(uint32_t a, uint32_t b) { std::swap(data_[a], data_[b]); }
    void swap_cols(uint32_t a, uint32_t b);

    bool operator==(const BitMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }

private:
    uint32_t rows_ = 0;
    uint32_t cols_ = 0;
    std::vector<BitVector> data_;
};

// dst ^= src. Lengths must match.
void xor_into(BitVector& dst, const BitVector& src);

// Number of set bits.
uint32_t weight(const BitVector& v);

// weight(a ^ b) without materializing the sum; the engines count calls to
// this as one row addition (the XOR happens, fused with the popcount).
uint32_t weight_of_xor(const BitVector& a, const BitVector& b);

// XOR of the rows selected by a nonempty strictly increasing index tuple.
BitVector combine_rows(const BitMatrix& m, const std::vector<uint32_t>& c);

// Row-reduction utilities (plain Gaussian elimination, no column swaps).
uint32_t rank_of(const BitMatrix& m);

// Reduced row echelon form with zero rows dropped; two matrices have equal
// row spaces iff their rref_of results are equal.
BitMatrix rref_of(const BitMatrix& m);

// Independent spanning subset of the rows, in echelon form (= rref_of).
// Throws when the matrix has no nonzero row.
BitMatrix row_basis(const BitMatrix& m);

} // namespace md
