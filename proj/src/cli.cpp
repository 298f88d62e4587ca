#include "mindist/cli.hpp"

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "mindist/codeconstruct.hpp"
#include "mindist/cost.hpp"
#include "mindist/engines.hpp"
#include "mindist/io.hpp"
#include "mindist/parallel.hpp"
#include "mindist/util.hpp"

namespace md {

namespace {

std::vector<uint32_t> parse_uint_list(const std::string& text) {
    std::vector<uint32_t> out;
    std::istringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        size_t pos = 0;
        unsigned long v = std::stoul(item, &pos);
        if (pos != item.size())
            throw std::invalid_argument("bad list item '" + item + "'");
        out.push_back(static_cast<uint32_t>(v));
    }
    if (out.empty()) throw std::invalid_argument("empty list");
    return out;
}

uint64_t env_u64(const char* name, uint64_t fallback) {
    const char* v = std::getenv(name);
    if (!v || !*v) return fallback;
    return std::stoull(v);
}

uint64_t fresh_seed() {
    std::random_device rd;
    uint64_t s = (uint64_t{rd()} << 32) ^ rd() ^
                 static_cast<uint64_t>(
                     std::chrono::steady_clock::now().time_since_epoch().count());
    std::cerr << "seed: " << s << "\n";
    return s;
}

struct MindistFlags {
    std::string path;
    std::string algorithm = "saved";
    uint32_t s = 5;
    uint32_t unroll = 2;
    uint32_t trials = 10;
    int64_t seed = -1;
    int64_t workers = -1;
    std::string schedule = "serial";
    uint32_t prefix = 0;
    std::string order = "lex";
    bool pretty = false;
};

void cmd_mindist(const MindistFlags& f) {
    BitMatrix M = parse_matrix_file(f.path);

    EngineConfig ecfg;
    ecfg.algorithm = algorithm_from_name(f.algorithm);
    ecfg.s = f.s;
    ecfg.unroll = f.unroll;
    ecfg.permutation_trials = f.trials;
    ecfg.seed = f.seed >= 0 ? static_cast<uint64_t>(f.seed) : fresh_seed();
    ecfg.workers = f.workers >= 0 ? static_cast<uint32_t>(f.workers)
                                  : static_cast<uint32_t>(env_u64("MINDIST_WORKERS", 1));
    ecfg.memory_cap_bytes = env_u64("MINDIST_MEMORY_CAP_BYTES", uint64_t{2} << 30);

    ScheduleConfig scfg;
    scfg.mode = schedule_from_name(f.schedule);
    scfg.workers = ecfg.workers;
    scfg.prefix_param = f.prefix;
    scfg.order = f.order == "left_lex" ? CombOrder::left_lex : CombOrder::lex;
    if (f.order != "lex" && f.order != "left_lex")
        throw std::invalid_argument("order must be lex or left_lex");

    auto t0 = std::chrono::steady_clock::now();
    MinWeightResult res = min_weight_scheduled(M, ecfg, scfg);
    auto t1 = std::chrono::steady_clock::now();

    ResultRecord rec;
    rec.d = res.d;
    rec.n = M.cols();
    rec.k = res.gamma.effective_k;
    rec.algorithm = scfg.mode == ScheduleMode::serial ? algorithm_name(ecfg.algorithm)
                                                      : schedule_name(scfg.mode);
    rec.m = res.gamma.m;
    rec.k_last = res.gamma.k_last;
    rec.g_final = res.stats.g_final;
    rec.row_additions = res.stats.row_additions;
    rec.combinations = res.stats.combinations;
    rec.wall_seconds = std::chrono::duration<double>(t1 - t0).count();
    rec.seed = ecfg.seed;
    rec.workers = ecfg.workers;
    if (f.pretty)
        std::cout << result_to_text(rec);
    else
        std::cout << result_to_json(rec) << "\n";
}

struct CostFlags {
    std::string k_list;
    std::string g_list;
    uint64_t n = 1;
    uint32_t s = 5;
    bool csv = false;
};

void cmd_cost(const CostFlags& f) {
    auto ks = parse_uint_list(f.k_list);
    auto gs = parse_uint_list(f.g_list);
    auto reports = cost_table(ks, gs, f.n, f.s);
    if (f.csv) {
        std::cout << "algorithm,k,g,n,s,additions,billions\n";
        for (const auto& r : reports) {
            std::cout << r.algorithm << "," << r.k << "," << r.g << "," << r.n << ","
                      << r.s << "," << u128_to_string(r.additions) << ","
                      << r.rounded_billions << "\n";
        }
        return;
    }
    // text table: one row per algorithm, one column per (k, g)
    std::vector<std::string> algs;
    for (const auto& r : reports)
        if (algs.empty() || algs.back() != r.algorithm) algs.push_back(r.algorithm);
    size_t cols = ks.size() * gs.size();
    std::cout << "additions in billions (s=" << f.s << ", n=" << f.n << ")\n";
    std::ostringstream head;
    head << std::left << std::setw(12) << "algorithm";
    for (uint32_t k : ks)
        for (uint32_t g : gs) {
            std::string label = "k=" + std::to_string(k) + " g=" + std::to_string(g);
            head << std::right << std::setw(16) << label;
        }
    std::cout << head.str() << "\n";
    size_t idx = 0;
    for (const auto& alg : algs) {
        std::ostringstream row;
        row << std::left << std::setw(12) << alg;
        for (size_t c = 0; c < cols; ++c, ++idx)
            row << std::right << std::setw(16) << reports[idx].rounded_billions;
        std::cout << row.str() << "\n";
    }
}

std::string resolve_fixture(const std::string& name) {
    namespace fs = std::filesystem;
    if (fs::exists(name)) return name;
    if (name.find('/') == std::string::npos) {
        const char* dir = std::getenv("MINDIST_FIXTURE_DIR");
        if (dir && *dir) {
            std::string p = std::string(dir) + "/" + name + ".mpu";
            if (fs::exists(p)) return p;
        }
        std::string local = "fixtures/" + name + ".mpu";
        if (fs::exists(local)) return local;
    }
    throw std::invalid_argument("fixture not found: " + name);
}

BitMatrix build_mpu(const MpuFixture& fx) {
    BinPoly f1 = BinPoly::from_exponents(fx.f1);
    BinPoly f2;
    if (!fx.f2.empty()) {
        f2 = BinPoly::from_exponents(fx.f2);
    } else {
        BinPoly q = BinPoly::from_exponents(fx.f2_quotient);
        auto dm = BinPoly::x_pow_minus_one(fx.m).divmod(q);
        if (!dm.remainder.is_zero())
            throw std::invalid_argument("f2_quotient does not divide x^m - 1");
        f2 = dm.quotient;
    }
    BinPoly p = BinPoly::from_exponents(fx.p);
    if (!f2.divmod(f1).remainder.is_zero())
        std::cerr << "note: f1 does not divide f2; the codes are not nested\n";
    BitMatrix out = matrix_product_unit_cyclic(f1, f2, p, fx.m);
    if (fx.has_expect && (out.cols() != fx.expect_n || out.rows() != fx.expect_k))
        throw std::invalid_argument(
            "construction shape [" + std::to_string(out.cols()) + "," +
            std::to_string(out.rows()) + "] does not match expected [" +
            std::to_string(fx.expect_n) + "," + std::to_string(fx.expect_k) + "]");
    return out;
}

int dispatch(CLI::App& app, int argc, const char* const* argv) {
    try {
        app.parse(argc, argv);
        return 0;
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::overflow_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
}

} // namespace

std::string result_to_json(const ResultRecord& r, bool pretty_indent) {
    nlohmann::json j;
    j["d"] = r.d;
    j["n"] = r.n;
    j["k"] = r.k;
    j["algorithm"] = r.algorithm;
    j["m"] = r.m;
    j["k_last"] = r.k_last;
    j["g_final"] = r.g_final;
    j["row_additions"] = r.row_additions;
    j["combinations"] = r.combinations;
    j["wall_seconds"] = r.wall_seconds;
    j["seed"] = r.seed;
    j["workers"] = r.workers;
    return pretty_indent ? j.dump(2) : j.dump();
}

std::string result_to_text(const ResultRecord& r) {
    std::ostringstream out;
    out << "d:             " << r.d << "\n"
        << "n:             " << r.n << "\n"
        << "k:             " << r.k << "\n"
        << "algorithm:     " << r.algorithm << "\n"
        << "m:             " << r.m << "\n"
        << "k_last:        " << r.k_last << "\n"
        << "g_final:       " << r.g_final << "\n"
        << "row_additions: " << r.row_additions << "\n"
        << "combinations:  " << r.combinations << "\n"
        << "wall_seconds:  " << r.wall_seconds << "\n"
        << "seed:          " << r.seed << "\n"
        << "workers:       " << r.workers << "\n";
    return out.str();
}

int run_cli(int argc, const char* const* argv) {
    CLI::App app{"minimum Hamming distance of binary linear codes"};
    app.require_subcommand(1);

    // mindist
    auto flags = std::make_shared<MindistFlags>();
    CLI::App* sub = app.add_subcommand("mindist", "compute the minimum distance of a code");
    sub->add_option("file", flags->path, "generator matrix file")->required();
    sub->add_option("--algorithm", flags->algorithm,
                    "brute|basic|optimized|stack|saved|saved_unrolled");
    sub->add_option("--s", flags->s, "saved-additions depth (1..8)");
    sub->add_option("--unroll", flags->unroll, "unroll width (1..3)");
    sub->add_option("--trials", flags->trials, "column permutations tried");
    sub->add_option("--seed", flags->seed, "PRNG seed (default: random, logged)");
    sub->add_option("--workers", flags->workers, "worker threads");
    sub->add_option("--schedule", flags->schedule,
                    "serial|dynamic|dynamic_2cm|static_cyclic|static_snake");
    sub->add_option("--prefix", flags->prefix,
                    "prefix size (dynamic: absolute, static: g minus this)");
    sub->add_option("--order", flags->order, "prefix order: lex|left_lex");
    sub->add_flag("--pretty", flags->pretty, "human-readable text instead of JSON");
    sub->callback([flags] { cmd_mindist(*flags); });

    // cost
    auto cflags = std::make_shared<CostFlags>();
    CLI::App* cost = app.add_subcommand("cost", "analytic addition counts per round");
    cost->add_option("--k", cflags->k_list, "comma-separated k values")->required();
    cost->add_option("--g", cflags->g_list, "comma-separated g values")->required();
    cost->add_option("--n", cflags->n, "code length factor (default 1)");
    cost->add_option("--s", cflags->s, "saved-additions depth");
    cost->add_flag("--csv", cflags->csv, "CSV instead of the text table");
    cost->callback([cflags] { cmd_cost(*cflags); });

    // construct
    CLI::App* cons = app.add_subcommand("construct", "build generator matrices");
    cons->require_subcommand(1);

    auto cyc_m = std::make_shared<uint32_t>(0);
    auto cyc_poly = std::make_shared<std::string>();
    CLI::App* cyc = cons->add_subcommand("cyclic", "cyclic code from a generator polynomial");
    cyc->add_option("--m", *cyc_m, "code length")->required();
    cyc->add_option("--poly", *cyc_poly, "exponent list, e.g. 3,1,0")->required();
    cyc->callback([cyc_m, cyc_poly] {
        BinPoly f = BinPoly::from_exponents(parse_uint_list(*cyc_poly));
        std::cout << serialize_matrix(cyclic_generator_matrix(f, *cyc_m));
    });

    struct MpuFlags {
        std::string fixture;
        uint32_t m = 0;
        std::string f1, f2, f2q, p;
    };
    auto mflags = std::make_shared<MpuFlags>();
    CLI::App* mpu = cons->add_subcommand("mpu", "matrix-product unit construction");
    mpu->add_option("--fixture", mflags->fixture, "fixture name or path");
    mpu->add_option("--m", mflags->m, "base code length");
    mpu->add_option("--f1", mflags->f1, "outer generator polynomial exponents");
    mpu->add_option("--f2", mflags->f2, "inner generator polynomial exponents");
    mpu->add_option("--f2-quotient", mflags->f2q, "f2 = (x^m - 1) / this");
    mpu->add_option("--p", mflags->p, "unit polynomial exponents");
    mpu->callback([mflags] {
        MpuFixture fx;
        if (!mflags->fixture.empty()) {
            fx = parse_mpu_fixture(resolve_fixture(mflags->fixture));
        } else {
            if (mflags->m == 0 || mflags->f1.empty() || mflags->p.empty() ||
                (mflags->f2.empty() == mflags->f2q.empty()))
                throw std::invalid_argument(
                    "mpu needs --fixture, or --m --f1 --p and one of --f2/--f2-quotient");
            fx.m = mflags->m;
            fx.f1 = parse_uint_list(mflags->f1);
            if (!mflags->f2.empty()) fx.f2 = parse_uint_list(mflags->f2);
            if (!mflags->f2q.empty()) fx.f2_quotient = parse_uint_list(mflags->f2q);
            fx.p = parse_uint_list(mflags->p);
        }
        std::cout << serialize_matrix(build_mpu(fx));
    });

    auto ext_path = std::make_shared<std::string>();
    CLI::App* ext = cons->add_subcommand("extend", "append an overall parity column");
    ext->add_option("file", *ext_path, "generator matrix file")->required();
    ext->callback([ext_path] {
        std::cout << serialize_matrix(extend_code(parse_matrix_file(*ext_path)));
    });

    auto pun_path = std::make_shared<std::string>();
    auto pun_cols = std::make_shared<std::string>();
    CLI::App* pun = cons->add_subcommand("puncture", "delete columns (1-based)");
    pun->add_option("file", *pun_path, "generator matrix file")->required();
    pun->add_option("--cols", *pun_cols, "1-based column positions")->required();
    pun->callback([pun_path, pun_cols] {
        PunctureResult res =
            puncture_code(parse_matrix_file(*pun_path), parse_uint_list(*pun_cols));
        if (res.k < res.original_k)
            std::cerr << "note: dimension dropped from " << res.original_k << " to "
                      << res.k << "\n";
        std::cout << serialize_matrix(res.matrix);
    });

    // random
    struct RandomFlags {
        uint32_t n = 0, k = 0;
        int64_t seed = -1;
    };
    auto rflags = std::make_shared<RandomFlags>();
    CLI::App* rnd = app.add_subcommand("random", "seeded random full-rank generator matrix");
    rnd->add_option("--n", rflags->n, "code length")->required();
    rnd->add_option("--k", rflags->k, "code dimension")->required();
    rnd->add_option("--seed", rflags->seed, "PRNG seed (default: random, logged)");
    rnd->callback([rflags] {
        uint64_t seed = rflags->seed >= 0 ? static_cast<uint64_t>(rflags->seed) : fresh_seed();
        SplitMix64 rng(seed);
        BitMatrix M = random_full_rank_matrix(rflags->n, rflags->k, rng);
        std::cout << "# random [" << rflags->n << "," << rflags->k << "] seed " << seed
                  << "\n";
        std::cout << serialize_matrix(M);
    });

    return dispatch(app, argc, argv);
}

} // namespace md
