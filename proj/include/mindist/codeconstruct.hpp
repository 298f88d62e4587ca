#pragma once

#include <cstdint>
#include <vector>

#include "mindist/f2core.hpp"

// Binary polynomial arithmetic and the generator-matrix constructions:
// cyclic codes, the [G1|G1*P; 0|G2] matrix-product unit construction with a
// circulant P, and the extend/puncture derivations.

namespace md {

// Polynomial over F2, bit i of words[i/64] = coefficient of x^i.
class BinPoly {
public:
    BinPoly() = default;
    static BinPoly one();
    static BinPoly x_to(uint32_t e);
    static BinPoly from_exponents(const std::vector<uint32_t>& exps);
    static BinPoly x_pow_minus_one(uint32_t m); // x^m + 1

    bool is_zero() const;
    int64_t degree() const; // -1 for the zero polynomial
    bool get(uint32_t i) const;
    void set(uint32_t i, bool v);
    std::vector<uint32_t> exponents() const; // descending

    bool operator==(const BinPoly& o) const;

    BinPoly operator+(const BinPoly& o) const; // XOR
    BinPoly operator*(const BinPoly& o) const;
    struct DivMod;
    DivMod divmod(const BinPoly& divisor) const;
    BinPoly mod_x_pow_minus_one(uint32_t m) const; // fold exponents mod m

    friend BinPoly gcd(BinPoly a, BinPoly b);

private:
    std::vector<uint64_t> words_;
    void trim();
};

struct BinPoly::DivMod {
    BinPoly quotient;
    BinPoly remainder;
};

BinPoly gcd(BinPoly a, BinPoly b);

// Cyclic code generated by f: rows x^i * f for i = 0..m-deg(f)-1, as a
// (m - deg f) x m matrix. Throws unless f divides x^m - 1.
BitMatrix cyclic_generator_matrix(const BinPoly& f, uint32_t m);

// m x m circulant whose row i holds x^i * p mod x^m - 1.
BitMatrix circulant(const BinPoly& p, uint32_t m);

// True when every row of inner lies in the row space of outer. Nesting
// C2 inside C1 tightens the distance bounds of the product construction but
// is not needed for its shape; notably the published [234,51] recipe is not
// nested (its f1 has even weight, so x+1 divides it while it cannot divide
// f2 = (x^m-1)/(x+1) with x^m-1 squarefree), so the builders below report
// nesting instead of enforcing it.
bool codes_nested(const BitMatrix& outer, const BitMatrix& inner);

// Matrix-product unit construction [G1 | G1*P; 0 | G2] with an invertible
// circulant P (gcd(p, x^m - 1) = 1 enforced); codewords read
// (c1, c1*P + c2), giving length 2m and dimension k1 + k2.
BitMatrix matrix_product_unit(const BitMatrix& G1, const BitMatrix& G2, const BinPoly& p,
                              uint32_t m);

// Cyclic-code wrapper: builds G1, G2 from divisors of x^m - 1 and applies
// the unit construction. Nesting here means f1 | f2; query codes_nested or
// the polynomials directly when the distinction matters.
BitMatrix matrix_product_unit_cyclic(const BinPoly& f1, const BinPoly& f2, const BinPoly& p,
                                     uint32_t m);

// Appends an overall parity column: every row gets even weight.
BitMatrix extend_code(const BitMatrix& G);

struct PunctureResult {
    BitMatrix matrix;  // row basis of the punctured code
    uint32_t original_k = 0;
    uint32_t k = 0;    // dimension after puncturing; may drop
};

// Deletes the given 1-based column positions and row-reduces the result.
PunctureResult puncture_code(const BitMatrix& G, const std::vector<uint32_t>& positions);

} // namespace md
