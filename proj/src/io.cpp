#include "mindist/io.hpp"

#include <fstream>
#include <sstream>

namespace md {

ParseError::ParseError(uint32_t line_no, uint32_t column_no, const std::string& message)
    : std::invalid_argument("line " + std::to_string(line_no) + ", column " +
                            std::to_string(column_no) + ": " + message),
      line(line_no),
      column(column_no) {}

namespace {

bool is_blank_or_comment(const std::string& line) {
    for (char ch : line) {
        if (ch == ' ' || ch == '\t' || ch == '\r') continue;
        return ch == '#';
    }
    return true;
}

std::string strip(const std::string& line) {
    size_t b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    size_t e = line.find_last_not_of(" \t\r");
    return line.substr(b, e - b + 1);
}

} // namespace

BitMatrix parse_matrix(std::istream& in) {
    std::string line;
    uint32_t line_no = 0;
    uint64_t n = 0, k = 0;
    bool have_header = false;

    while (!have_header) {
        if (!std::getline(in, line)) throw ParseError(line_no + 1, 1, "missing header line");
        ++line_no;
        if (is_blank_or_comment(line)) continue;
        std::istringstream hs(strip(line));
        if (!(hs >> n >> k)) throw ParseError(line_no, 1, "header must be two integers: n k");
        std::string rest;
        if (hs >> rest) throw ParseError(line_no, 1, "header must be exactly: n k");
        if (n < 1 || k < 1) throw ParseError(line_no, 1, "n and k must be >= 1");
        if (n > 1u << 20 || k > 1u << 20) throw ParseError(line_no, 1, "unreasonable dimensions");
        have_header = true;
    }

    BitMatrix M(static_cast<uint32_t>(k), static_cast<uint32_t>(n));
    uint32_t row = 0;
    while (row < k) {
        if (!std::getline(in, line))
            throw ParseError(line_no + 1, 1,
                             "expected " + std::to_string(k) + " rows, got " + std::to_string(row));
        ++line_no;
        if (is_blank_or_comment(line)) continue;
        std::string data = strip(line);
        if (data.size() != n)
            throw ParseError(line_no, static_cast<uint32_t>(data.size()) + 1,
                             "row must have exactly " + std::to_string(n) + " symbols");
        for (uint32_t c = 0; c < n; ++c) {
            if (data[c] == '1')
                M.set(row, c, true);
            else if (data[c] != '0')
                throw ParseError(line_no, c + 1, "symbols must be 0 or 1");
        }
        ++row;
    }
    return M;
}

BitMatrix parse_matrix_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open file: " + path);
    return parse_matrix(in);
}

std::string serialize_matrix(const BitMatrix& M) {
    std::string out = std::to_string(M.cols()) + " " + std::to_string(M.rows()) + "\n";
    for (uint32_t r = 0; r < M.rows(); ++r) {
        for (uint32_t c = 0; c < M.cols(); ++c) out += M.get(r, c) ? '1' : '0';
        out += '\n';
    }
    return out;
}

namespace {

std::vector<uint32_t> parse_exponent_list(const std::string& text, uint32_t line_no) {
    std::vector<uint32_t> out;
    std::string item;
    std::istringstream ss(text);
    while (std::getline(ss, item, ',')) {
        std::istringstream is(strip(item));
        int64_t v = -1;
        if (!(is >> v) || v < 0)
            throw ParseError(line_no, 1, "bad exponent '" + item + "'");
        out.push_back(static_cast<uint32_t>(v));
    }
    if (out.empty()) throw ParseError(line_no, 1, "empty exponent list");
    return out;
}

} // namespace

MpuFixture parse_mpu_fixture(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open fixture: " + path);
    MpuFixture fx;
    std::string line;
    uint32_t line_no = 0;
    bool have_m = false, have_f1 = false, have_f2 = false, have_p = false;
    while (std::getline(in, line)) {
        ++line_no;
        if (is_blank_or_comment(line)) continue;
        std::string body = strip(line);
        size_t sp = body.find_first_of(" \t");
        if (sp == std::string::npos) throw ParseError(line_no, 1, "expected: key value");
        std::string key = body.substr(0, sp);
        std::string value = strip(body.substr(sp + 1));
        if (key == "m") {
            fx.m = static_cast<uint32_t>(std::stoul(value));
            have_m = true;
        } else if (key == "f1") {
            fx.f1 = parse_exponent_list(value, line_no);
            have_f1 = true;
        } else if (key == "f2") {
            fx.f2 = parse_exponent_list(value, line_no);
            have_f2 = true;
        } else if (key == "f2_quotient") {
            fx.f2_quotient = parse_exponent_list(value, line_no);
            have_f2 = true;
        } else if (key == "p") {
            fx.p = parse_exponent_list(value, line_no);
            have_p = true;
        } else if (key == "expect") {
            std::istringstream es(value);
            if (!(es >> fx.expect_n >> fx.expect_k))
                throw ParseError(line_no, 1, "expect needs two integers: n k");
            fx.has_expect = true;
        } else {
            throw ParseError(line_no, 1, "unknown key '" + key + "'");
        }
    }
    if (!have_m || !have_f1 || !have_f2 || !have_p)
        throw std::invalid_argument(path + ": fixture needs m, f1, f2 (or f2_quotient), p");
    if (!fx.f2.empty() && !fx.f2_quotient.empty())
        throw std::invalid_argument(path + ": give f2 or f2_quotient, not both");
    return fx;
}

} // namespace md
