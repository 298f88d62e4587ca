#pragma once

#include <cstdint>
#include <string>

// Command-line front end; run_cli is main() behind a testable seam.
// Exit codes: 0 ok, 1 internal error, 2 invalid input or config.

namespace md {

struct ResultRecord {
    uint32_t d = 0;
    uint32_t n = 0;
    uint32_t k = 0;
    std::string algorithm;
    uint32_t m = 0;
    uint32_t k_last = 0;
    uint32_t g_final = 0;
    uint64_t row_additions = 0;
    uint64_t combinations = 0;
    double wall_seconds = 0.0;
    uint64_t seed = 0;
    uint32_t workers = 1;
};

std::string result_to_json(const ResultRecord& r, bool pretty_indent = false);
std::string result_to_text(const ResultRecord& r);

int run_cli(int argc, const char* const* argv);

} // namespace md
