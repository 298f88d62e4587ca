#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "mindist/f2core.hpp"

// Matrix file format and construction-fixture parsing.
//
// Matrix files: a header line "n k", then k lines of n characters from
// {0,1}. Lines whose first non-blank character is '#' are comments and may
// appear anywhere. parse/serialize round-trip exactly up to comments and
// surrounding whitespace.

namespace md {

class ParseError : public std::invalid_argument {
public:
    ParseError(uint32_t line, uint32_t column, const std::string& message);
    uint32_t line;
    uint32_t column;
};

BitMatrix parse_matrix(std::istream& in);
BitMatrix parse_matrix_file(const std::string& path);
std::string serialize_matrix(const BitMatrix& M);

// Construction fixture: key-value lines ("m 117", "f1 67,59,...",
// "f2 116,...", "f2_quotient 1,0" for (x^m-1)/q, "p 117,...",
// "expect 234 51"), '#' comments anywhere. Exponent lists are
// comma-separated, any order, no duplicates.
struct MpuFixture {
    uint32_t m = 0;
    std::vector<uint32_t> f1;
    std::vector<uint32_t> f2;          // empty when f2_quotient is given
    std::vector<uint32_t> f2_quotient; // empty when f2 is given
    bool has_expect = false;
    uint32_t expect_n = 0;
    uint32_t expect_k = 0;
    std::vector<uint32_t> p;
};

MpuFixture parse_mpu_fixture(const std::string& path);

} // namespace md
