#include "mindist/codeconstruct.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace md {

namespace {

uint32_t word_count(uint32_t bits) { return (bits + 63) / 64; }

} // namespace

void BinPoly::trim() {
    while (!words_.empty() && words_.back() == 0) words_.pop_back();
}

BinPoly BinPoly::one() { return x_to(0); }

BinPoly BinPoly::x_to(uint32_t e) {
    BinPoly p;
    p.words_.assign(e / 64 + 1, 0);
    p.words_[e / 64] = uint64_t{1} << (e % 64);
    return p;
}

BinPoly BinPoly::from_exponents(const std::vector<uint32_t>& exps) {
    BinPoly p;
    for (uint32_t e : exps) {
        if (e / 64 >= p.words_.size()) p.words_.resize(e / 64 + 1, 0);
        if (p.words_[e / 64] >> (e % 64) & 1)
            throw std::invalid_argument("BinPoly: duplicate exponent " + std::to_string(e));
        p.words_[e / 64] |= uint64_t{1} << (e % 64);
    }
    p.trim();
    return p;
}

BinPoly BinPoly::x_pow_minus_one(uint32_t m) {
    if (m == 0) throw std::invalid_argument("BinPoly: m must be >= 1");
    return from_exponents({m, 0});
}

bool BinPoly::is_zero() const { return words_.empty(); }

int64_t BinPoly::degree() const {
    if (words_.empty()) return -1;
    uint64_t top = words_.back();
    int64_t bit = 63;
    while (!(top >> bit & 1)) --bit;
    return static_cast<int64_t>(words_.size() - 1) * 64 + bit;
}

bool BinPoly::get(uint32_t i) const {
    if (i / 64 >= words_.size()) return false;
    return words_[i / 64] >> (i % 64) & 1;
}

void BinPoly::set(uint32_t i, bool v) {
    if (i / 64 >= words_.size()) {
        if (!v) return;
        words_.resize(i / 64 + 1, 0);
    }
    uint64_t mask = uint64_t{1} << (i % 64);
    if (v)
        words_[i / 64] |= mask;
    else
        words_[i / 64] &= ~mask;
    trim();
}

std::vector<uint32_t> BinPoly::exponents() const {
    std::vector<uint32_t> out;
    for (int64_t d = degree(); d >= 0; --d)
        if (get(static_cast<uint32_t>(d))) out.push_back(static_cast<uint32_t>(d));
    return out;
}

bool BinPoly::operator==(const BinPoly& o) const { return words_ == o.words_; }

BinPoly BinPoly::operator+(const BinPoly& o) const {
    BinPoly r;
    r.words_.resize(std::max(words_.size(), o.words_.size()), 0);
    for (size_t i = 0; i < r.words_.size(); ++i) {
        uint64_t a = i < words_.size() ? words_[i] : 0;
        uint64_t b = i < o.words_.size() ? o.words_[i] : 0;
        r.words_[i] = a ^ b;
    }
    r.trim();
    return r;
}

BinPoly BinPoly::operator*(const BinPoly& o) const {
    BinPoly r;
    if (is_zero() || o.is_zero()) return r;
    uint32_t dr = static_cast<uint32_t>(degree() + o.degree());
    r.words_.assign(word_count(dr + 1), 0);
    for (size_t wi = 0; wi < words_.size(); ++wi) {
        uint64_t w = words_[wi];
        while (w) {
            uint32_t bit = static_cast<uint32_t>(wi * 64) +
                           static_cast<uint32_t>(std::countr_zero(w));
            w &= w - 1;
            // r += o << bit
            uint32_t ws = bit / 64, bs = bit % 64;
            for (size_t j = 0; j < o.words_.size(); ++j) {
                r.words_[j + ws] ^= o.words_[j] << bs;
                if (bs && j + ws + 1 < r.words_.size())
                    r.words_[j + ws + 1] ^= o.words_[j] >> (64 - bs);
            }
        }
    }
    r.trim();
    return r;
}

BinPoly::DivMod BinPoly::divmod(const BinPoly& divisor) const {
    if (divisor.is_zero()) throw std::invalid_argument("BinPoly: division by zero");
    DivMod out;
    out.remainder = *this;
    int64_t dd = divisor.degree();
    int64_t rd = out.remainder.degree();
    if (rd >= dd) out.quotient.words_.assign(word_count(static_cast<uint32_t>(rd - dd) + 1), 0);
    while (rd >= dd) {
        uint32_t shift = static_cast<uint32_t>(rd - dd);
        out.quotient.words_[shift / 64] |= uint64_t{1} << (shift % 64);
        // remainder += divisor << shift
        uint32_t ws = shift / 64, bs = shift % 64;
        for (size_t j = 0; j < divisor.words_.size(); ++j) {
            out.remainder.words_[j + ws] ^= divisor.words_[j] << bs;
            if (bs && j + ws + 1 < out.remainder.words_.size())
                out.remainder.words_[j + ws + 1] ^= divisor.words_[j] >> (64 - bs);
        }
        out.remainder.trim();
        rd = out.remainder.degree();
    }
    out.quotient.trim();
    return out;
}

BinPoly BinPoly::mod_x_pow_minus_one(uint32_t m) const {
    BinPoly r;
    for (int64_t d = degree(); d >= 0; --d)
        if (get(static_cast<uint32_t>(d))) {
            uint32_t e = static_cast<uint32_t>(d) % m;
            r.set(e, !r.get(e));
        }
    return r;
}

BinPoly gcd(BinPoly a, BinPoly b) {
    while (!b.is_zero()) {
        BinPoly r = a.divmod(b).remainder;
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

BitMatrix cyclic_generator_matrix(const BinPoly& f, uint32_t m) {
    if (f.is_zero()) throw std::invalid_argument("cyclic code: zero generator polynomial");
    int64_t df = f.degree();
    if (df > static_cast<int64_t>(m))
        throw std::invalid_argument("cyclic code: deg f must not exceed m");
    if (!BinPoly::x_pow_minus_one(m).divmod(f).remainder.is_zero())
        throw std::invalid_argument("cyclic code: f does not divide x^m - 1");
    uint32_t k = m - static_cast<uint32_t>(df);
    BitMatrix G(k, m);
    for (uint32_t i = 0; i < k; ++i)
        for (uint32_t c = 0; c <= static_cast<uint32_t>(df); ++c)
            if (f.get(c)) G.set(i, c + i, true);
    return G;
}

BitMatrix circulant(const BinPoly& p, uint32_t m) {
    BitMatrix P(m, m);
    BinPoly row = p.mod_x_pow_minus_one(m);
    for (uint32_t i = 0; i < m; ++i) {
        for (uint32_t c = 0; c < m; ++c)
            if (row.get(c)) P.set(i, c, true);
        row = (row * BinPoly::x_to(1)).mod_x_pow_minus_one(m);
    }
    return P;
}

// rows(inner) inside rowspace(outer): stacking must not raise the rank.
bool codes_nested(const BitMatrix& outer, const BitMatrix& inner) {
    if (outer.cols() != inner.cols())
        throw std::invalid_argument("codes_nested: column counts differ");
    BitMatrix stacked(outer.rows() + inner.rows(), outer.cols());
    for (uint32_t r = 0; r < outer.rows(); ++r) stacked.row(r) = outer.row(r);
    for (uint32_t r = 0; r < inner.rows(); ++r) stacked.row(outer.rows() + r) = inner.row(r);
    return rank_of(stacked) == rank_of(outer);
}

BitMatrix matrix_product_unit(const BitMatrix& G1, const BitMatrix& G2, const BinPoly& p,
                              uint32_t m) {
    if (G1.cols() != m || G2.cols() != m)
        throw std::invalid_argument("matrix product: G1 and G2 must have m columns");
    BinPoly pm = p.mod_x_pow_minus_one(m);
    if (!(gcd(pm, BinPoly::x_pow_minus_one(m)) == BinPoly::one()))
        throw std::invalid_argument("matrix product: p must be a unit mod x^m - 1");

    uint32_t k1 = G1.rows(), k2 = G2.rows();
    BitMatrix P = circulant(pm, m);
    BitMatrix out(k1 + k2, 2 * m);
    for (uint32_t r = 0; r < k1; ++r) {
        for (uint32_t c = 0; c < m; ++c)
            if (G1.get(r, c)) out.set(r, c, true);
        // right half: row r of G1 * P
        BitVector acc(m);
        for (uint32_t c = 0; c < m; ++c)
            if (G1.get(r, c)) xor_into(acc, P.row(c));
        for (uint32_t c = 0; c < m; ++c)
            if (acc.get(c)) out.set(r, m + c, true);
    }
    for (uint32_t r = 0; r < k2; ++r)
        for (uint32_t c = 0; c < m; ++c)
            if (G2.get(r, c)) out.set(k1 + r, m + c, true);
    return out;
}

BitMatrix matrix_product_unit_cyclic(const BinPoly& f1, const BinPoly& f2, const BinPoly& p,
                                     uint32_t m) {
    if (f1.is_zero() || f2.is_zero())
        throw std::invalid_argument("matrix product: zero generator polynomial");
    BitMatrix G1 = cyclic_generator_matrix(f1, m);
    BitMatrix G2 = cyclic_generator_matrix(f2, m);
    return matrix_product_unit(G1, G2, p, m);
}

BitMatrix extend_code(const BitMatrix& G) {
    BitMatrix out(G.rows(), G.cols() + 1);
    for (uint32_t r = 0; r < G.rows(); ++r) {
        for (uint32_t c = 0; c < G.cols(); ++c)
            if (G.get(r, c)) out.set(r, c, true);
        out.set(r, G.cols(), weight(G.row(r)) % 2 == 1);
    }
    return out;
}

PunctureResult puncture_code(const BitMatrix& G, const std::vector<uint32_t>& positions) {
    std::vector<bool> drop(G.cols(), false);
    for (uint32_t pos : positions) {
        if (pos < 1 || pos > G.cols())
            throw std::invalid_argument("puncture: position " + std::to_string(pos) +
                                        " outside 1.." + std::to_string(G.cols()));
        drop[pos - 1] = true;
    }
    uint32_t kept = 0;
    for (uint32_t c = 0; c < G.cols(); ++c)
        if (!drop[c]) ++kept;
    if (kept == 0) throw std::invalid_argument("puncture: no columns left");

    BitMatrix cut(G.rows(), kept);
    for (uint32_t r = 0; r < G.rows(); ++r) {
        uint32_t oc = 0;
        for (uint32_t c = 0; c < G.cols(); ++c) {
            if (drop[c]) continue;
            if (G.get(r, c)) cut.set(r, oc, true);
            ++oc;
        }
    }
    PunctureResult res;
    res.original_k = G.rows();
    res.matrix = rref_of(cut); // zero rows dropped, so rows() is the dimension
    res.k = res.matrix.rows();
    return res;
}

} // namespace md
