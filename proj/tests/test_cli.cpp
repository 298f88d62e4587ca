#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "mindist/cli.hpp"
#include "mindist/f2core.hpp"
#include "mindist/io.hpp"

using namespace md;
namespace fs = std::filesystem;

namespace {

const char* kHammingFile = "7 4\n1101000\n0110100\n0011010\n0001101\n";

struct CliRun {
    int code = -1;
    std::string out;
    std::string err;
};

// run_cli is a plain function; capture both streams around one invocation
CliRun run(const std::vector<std::string>& args) {
    std::vector<const char*> argv;
    argv.push_back("mindist");
    for (const auto& a : args) argv.push_back(a.c_str());

    std::ostringstream out, err;
    auto* old_out = std::cout.rdbuf(out.rdbuf());
    auto* old_err = std::cerr.rdbuf(err.rdbuf());
    CliRun r;
    r.code = run_cli(static_cast<int>(argv.size()), argv.data());
    std::cout.rdbuf(old_out);
    std::cerr.rdbuf(old_err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

std::string temp_file(const std::string& name, const std::string& content) {
    fs::path p = fs::temp_directory_path() / ("mindist_test_" + name);
    std::ofstream(p) << content;
    return p.string();
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

bool contains(const std::string& hay, const std::string& needle) {
    return hay.find(needle) != std::string::npos;
}

} // namespace

TEST_CASE("matrix grammar: round-trip, comments, precise error positions") {
    std::istringstream good("# generator\n\n  7 4 \n# mid-stream comment\n1101000\n"
                            "0110100\n\n0011010\n0001101\n");
    BitMatrix M = parse_matrix(good);
    CHECK(M.rows() == 4);
    CHECK(M.cols() == 7);
    CHECK(serialize_matrix(M) == kHammingFile);

    std::istringstream again(serialize_matrix(M));
    CHECK(serialize_matrix(parse_matrix(again)) == kHammingFile);

    auto expect_error = [](const std::string& text, uint32_t line, uint32_t column,
                           const std::string& fragment) {
        std::istringstream in(text);
        try {
            parse_matrix(in);
            FAIL_CHECK("no ParseError for: " << fragment);
        } catch (const ParseError& e) {
            CHECK(e.line == line);
            CHECK(e.column == column);
            CHECK(contains(e.what(), fragment));
        }
    };
    expect_error("7 4\n11x1000\n0110100\n0011010\n0001101\n", 2, 3, "symbols must be 0 or 1");
    expect_error("7 4\n110100\n", 2, 7, "exactly 7 symbols");
    expect_error("7 4\n1101000\n0110100\n", 4, 1, "expected 4 rows, got 2");
    expect_error("7 4 9\n", 1, 1, "exactly: n k");
    expect_error("0 4\n", 1, 1, ">= 1");
    expect_error("", 1, 1, "missing header");
}

TEST_CASE("mindist subcommand emits one JSON record") {
    std::string file = temp_file("hamming.txt", kHammingFile);
    CliRun r = run({"mindist", file, "--algorithm", "stack", "--seed", "5"});
    REQUIRE(r.code == 0);
    CHECK(r.err.empty()); // explicit seed: nothing logged

    auto j = nlohmann::json::parse(r.out);
    CHECK(j["d"] == 3);
    CHECK(j["n"] == 7);
    CHECK(j["k"] == 4);
    CHECK(j["algorithm"] == "stack");
    CHECK(j["m"] == 2);
    CHECK(j["k_last"] == 3);
    CHECK(j["g_final"] == 1);
    CHECK(j["seed"] == 5);
    CHECK(j["workers"] == 1);
    CHECK(j.contains("row_additions"));
    CHECK(j.contains("combinations"));
    CHECK(j["wall_seconds"].get<double>() >= 0.0);
}

TEST_CASE("mindist: omitted seed is drawn and logged") {
    std::string file = temp_file("hamming.txt", kHammingFile);
    CliRun r = run({"mindist", file, "--algorithm", "brute"});
    REQUIRE(r.code == 0);
    CHECK(contains(r.err, "seed:"));
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["d"] == 3);
    CHECK(j["algorithm"] == "brute");
}

TEST_CASE("mindist: schedules rename the record and honor MINDIST_WORKERS") {
    std::string file = temp_file("hamming.txt", kHammingFile);
    CliRun r = run({"mindist", file, "--schedule", "dynamic", "--workers", "2",
                    "--seed", "1"});
    REQUIRE(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["algorithm"] == "dynamic");
    CHECK(j["workers"] == 2);
    CHECK(j["d"] == 3);

    setenv("MINDIST_WORKERS", "3", 1);
    CliRun env_run = run({"mindist", file, "--seed", "1"});
    unsetenv("MINDIST_WORKERS");
    REQUIRE(env_run.code == 0);
    CHECK(nlohmann::json::parse(env_run.out)["workers"] == 3);
}

TEST_CASE("mindist --pretty prints the labeled text block") {
    std::string file = temp_file("hamming.txt", kHammingFile);
    CliRun r = run({"mindist", file, "--seed", "0", "--pretty"});
    REQUIRE(r.code == 0);
    CHECK(r.out.rfind("d:", 0) == 0);
    CHECK(contains(r.out, "d:             3\n"));
    CHECK(contains(r.out, "algorithm:     saved\n"));
    CHECK(contains(r.out, "workers:"));
}

TEST_CASE("cost --csv prints the exact analytic rows") {
    CliRun r = run({"cost", "--k", "50", "--g", "7", "--csv"});
    REQUIRE(r.code == 0);
    CHECK(contains(r.out, "algorithm,k,g,n,s,additions,billions\n"));
    CHECK(contains(r.out, "basic,50,7,1,5,599306400,0.599\n"));
    CHECK(contains(r.out, "optimized,50,7,1,5,169803480,0.170\n"));
    CHECK(contains(r.out, "stack,50,7,1,5,115775055,0.116\n"));
    CHECK(contains(r.out, "saved,50,7,1,5,99884400,0.100\n"));

    size_t lines = 0;
    for (char ch : r.out)
        if (ch == '\n') ++lines;
    CHECK(lines == 5);
}

TEST_CASE("cost text table carries the rounded figures") {
    CliRun r = run({"cost", "--k", "50,75", "--g", "7,10"});
    REQUIRE(r.code == 0);
    CHECK(contains(r.out, "additions in billions (s=5, n=1)"));
    CHECK(contains(r.out, "k=75 g=10"));
    CHECK(contains(r.out, "92.45"));
    CHECK(contains(r.out, "0.100"));
}

TEST_CASE("construct cyclic prints the generator matrix file") {
    CliRun r = run({"construct", "cyclic", "--m", "7", "--poly", "3,1,0"});
    REQUIRE(r.code == 0);
    CHECK(r.out == kHammingFile);
}

TEST_CASE("construct extend and puncture transform a matrix file") {
    std::string file = temp_file("hamming.txt", kHammingFile);

    CliRun ext = run({"construct", "extend", file});
    REQUIRE(ext.code == 0);
    CHECK(ext.out == "8 4\n11010001\n01101001\n00110101\n00011011\n");

    CliRun pun = run({"construct", "puncture", file, "--cols", "1,2,4"});
    REQUIRE(pun.code == 0);
    CHECK(pun.out.rfind("4 3\n", 0) == 0);
    CHECK(contains(pun.err, "dimension dropped from 4 to 3"));

    CliRun keep = run({"construct", "puncture", file, "--cols", "7"});
    REQUIRE(keep.code == 0);
    CHECK(keep.out.rfind("6 4\n", 0) == 0);
    CHECK(keep.err.empty());
}

TEST_CASE("construct mpu resolves fixtures and reports non-nested inputs") {
    setenv("MINDIST_FIXTURE_DIR", MINDIST_FIXTURE_DIR, 1);
    CliRun r = run({"construct", "mpu", "--fixture", "c1"});
    unsetenv("MINDIST_FIXTURE_DIR");
    REQUIRE(r.code == 0);
    CHECK(r.out.rfind("234 51\n", 0) == 0);
    CHECK(contains(r.err, "f1 does not divide f2"));

    // inline flags: [14,5] Hamming x repetition, genuinely nested, no note
    CliRun inl = run({"construct", "mpu", "--m", "7", "--f1", "3,1,0",
                      "--f2-quotient", "1,0", "--p", "0"});
    REQUIRE(inl.code == 0);
    CHECK(inl.out.rfind("14 5\n", 0) == 0);
    CHECK(inl.err.empty());

    CliRun missing = run({"construct", "mpu", "--m", "7", "--f1", "3,1,0"});
    CHECK(missing.code == 2);
    CHECK(contains(missing.err, "error:"));
}

TEST_CASE("construct mpu checks a fixture's expected size") {
    std::string bad = temp_file("bad_expect.mpu",
                                "m 7\nf1 3,1,0\nf2_quotient 1,0\np 0\nexpect 14 6\n");
    CliRun r = run({"construct", "mpu", "--fixture", bad});
    CHECK(r.code == 2);
    CHECK(contains(r.err, "error:"));
}

TEST_CASE("random is reproducible under a seed and parses back") {
    CliRun a = run({"random", "--n", "20", "--k", "8", "--seed", "42"});
    CliRun b = run({"random", "--n", "20", "--k", "8", "--seed", "42"});
    REQUIRE(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(contains(a.out, "# random [20,8] seed 42"));
    CHECK(a.err.empty());

    std::istringstream in(a.out);
    BitMatrix M = parse_matrix(in);
    CHECK(M.rows() == 8);
    CHECK(M.cols() == 20);
    CHECK(rank_of(M) == 8);

    CliRun unseeded = run({"random", "--n", "10", "--k", "3"});
    REQUIRE(unseeded.code == 0);
    CHECK(contains(unseeded.err, "seed:"));
}

TEST_CASE("failures exit 2 with an error line") {
    CliRun missing = run({"mindist", "/nonexistent/path.txt"});
    CHECK(missing.code == 2);
    CHECK(contains(missing.err, "error:"));

    std::string file = temp_file("hamming.txt", kHammingFile);
    CliRun badalg = run({"mindist", file, "--algorithm", "fancy", "--seed", "0"});
    CHECK(badalg.code == 2);
    CHECK(contains(badalg.err, "error:"));

    std::string broken = temp_file("broken.txt", "7 4\n11x1000\n0110100\n0011010\n0001101\n");
    CliRun parse_fail = run({"mindist", broken, "--seed", "0"});
    CHECK(parse_fail.code == 2);
    CHECK(contains(parse_fail.err, "line 2, column 3"));

    CliRun badsched = run({"mindist", file, "--schedule", "gossip", "--seed", "0"});
    CHECK(badsched.code == 2);

    CliRun badorder = run({"mindist", file, "--order", "snake", "--seed", "0"});
    CHECK(badorder.code == 2);

    CliRun no_sub = run({});
    CHECK(no_sub.code == 2);

    CliRun help = run({"--help"});
    CHECK(help.code == 0);
    CHECK(contains(help.out, "minimum Hamming distance"));
}

TEST_CASE("installed binary behaves like the in-process entry point") {
    std::string exe = MINDIST_CLI_PATH;
    std::string out_path = temp_file("spawn_out.txt", "");
    std::string err_path = temp_file("spawn_err.txt", "");

    int rc = std::system(
        (exe + " cost --k 50 --g 7 --csv > " + out_path + " 2> " + err_path).c_str());
    REQUIRE(rc != -1);
    CHECK(WIFEXITED(rc));
    CHECK(WEXITSTATUS(rc) == 0);
    CHECK(contains(slurp(out_path), "basic,50,7,1,5,599306400,0.599"));

    rc = std::system((exe + " mindist /nonexistent/path.txt > " + out_path + " 2> " +
                      err_path).c_str());
    REQUIRE(rc != -1);
    CHECK(WEXITSTATUS(rc) == 2);
    CHECK(contains(slurp(err_path), "error:"));

    std::string file = temp_file("hamming.txt", kHammingFile);
    rc = std::system((exe + " mindist " + file + " --seed 9 > " + out_path + " 2> " +
                      err_path).c_str());
    REQUIRE(rc != -1);
    CHECK(WEXITSTATUS(rc) == 0);
    auto j = nlohmann::json::parse(slurp(out_path));
    CHECK(j["d"] == 3);
}
