#include "mindist/engines.hpp"

#include <atomic>
#include <exception>
#include <limits>
#include <thread>

#include "mindist/cost.hpp"

namespace md {

namespace {

constexpr uint32_t NO_WEIGHT = std::numeric_limits<uint32_t>::max();

void assign_xor(BitVector& dst, const BitVector& a, const BitVector& b) {
    dst = a;
    xor_into(dst, b);
}

// Minimum weight over single rows; the g = 1 round of every engine.
uint32_t scan_rows(const BitMatrix& gamma, RoundStats& rs) {
    uint32_t best = NO_WEIGHT;
    for (uint32_t r = 0; r < gamma.rows(); ++r) {
        uint32_t w = weight(gamma.row(r));
        rs.combinations += 1;
        if (w < best) best = w;
    }
    return best;
}

void check_round_args(const BitMatrix& gamma, uint32_t g) {
    if (g < 1 || g > gamma.rows())
        throw std::invalid_argument("round: need 1 <= g <= k");
}

// Lex successor of a prefix drawn from {0..k-2} (so every prefix keeps at
// least one extension). Returns the leftmost changed index, or size on end.
uint32_t advance_prefix(Combination& prefix, uint32_t k) {
    uint32_t p = static_cast<uint32_t>(prefix.size());
    for (uint32_t i = p; i-- > 0;) {
        if (prefix[i] < (k - 2) - (p - 1 - i)) {
            ++prefix[i];
            for (uint32_t j = i + 1; j < p; ++j) prefix[j] = prefix[j - 1] + 1;
            return i;
        }
    }
    return p;
}

} // namespace

const char* algorithm_name(Algorithm a) {
    switch (a) {
        case Algorithm::brute_gray:     return "brute";
        case Algorithm::basic:          return "basic";
        case Algorithm::optimized:      return "optimized";
        case Algorithm::stack:          return "stack";
        case Algorithm::saved:          return "saved";
        case Algorithm::saved_unrolled: return "saved_unrolled";
    }
    throw std::logic_error("algorithm_name: unknown algorithm");
}

Algorithm algorithm_from_name(const std::string& name) {
    if (name == "brute") return Algorithm::brute_gray;
    if (name == "basic") return Algorithm::basic;
    if (name == "optimized") return Algorithm::optimized;
    if (name == "stack") return Algorithm::stack;
    if (name == "saved") return Algorithm::saved;
    if (name == "saved_unrolled") return Algorithm::saved_unrolled;
    throw std::invalid_argument("unknown algorithm: " + name);
}

void WorkStats::absorb(const RoundStats& rs) {
    row_additions += rs.additions;
    combinations += rs.combinations;
    row_accesses += rs.accesses;
    table_additions += rs.table_additions;
    messages += rs.messages;
}

void EngineConfig::validate() const {
    if (s < 1 || s > 8)
        throw std::invalid_argument("config: s must be in 1..8");
    if (unroll < 1 || unroll > 3)
        throw std::invalid_argument("config: unroll must be in 1..3");
    if (workers < 1)
        throw std::invalid_argument("config: workers must be >= 1");
    if (brute_cap < 1 || brute_cap > 63)
        throw std::invalid_argument("config: brute_cap must be in 1..63");
}

// ---------------------------------------------------------------- saved table

SavedAdditions::SavedAdditions(const BitMatrix& gamma, uint32_t s, uint64_t memory_cap_bytes)
    : gamma_(&gamma), s_(std::min(s, gamma.rows())) {
    if (s < 1) throw std::invalid_argument("SavedAdditions: s must be >= 1");
    uint64_t need = estimate_bytes(gamma.rows(), gamma.cols(), s_);
    if (need > memory_cap_bytes)
        throw MemoryCapError("saved-additions table needs " + std::to_string(need) +
                             " bytes, cap is " + std::to_string(memory_cap_bytes));
    rows_.resize(s_);
    last_.resize(s_);
}

uint64_t SavedAdditions::estimate_bytes(uint32_t k, uint32_t n, uint32_t s) {
    uint64_t bytes_per_row = (uint64_t{n} + 31) / 32 * 4;
    unsigned __int128 total = 0;
    for (uint32_t l = 1; l <= std::min(s, k); ++l) {
        total += static_cast<unsigned __int128>(binomial(k, l)) * bytes_per_row;
        if (total > std::numeric_limits<uint64_t>::max())
            return std::numeric_limits<uint64_t>::max();
    }
    return static_cast<uint64_t>(total);
}

uint64_t SavedAdditions::ensure_level(uint32_t l) {
    if (l > s_) throw std::invalid_argument("SavedAdditions: level beyond s");
    uint64_t xors = 0;
    uint32_t k = gamma_->rows();
    while (built_ < l) {
        uint32_t lvl = built_ + 1;
        auto& out = rows_[lvl - 1];
        auto& lst = last_[lvl - 1];
        uint64_t count = binomial(k, lvl);
        out.reserve(count);
        lst.reserve(count);
        if (lvl == 1) {
            for (uint32_t r = 0; r < k; ++r) {
                out.push_back(gamma_->row(r));
                lst.push_back(r);
            }
        } else {
            // Extending each level (lvl-1) row by every larger single row
            // visits level lvl exactly in lex order.
            const auto& prev = rows_[lvl - 2];
            const auto& prev_last = last_[lvl - 2];
            for (uint64_t p = 0; p < prev.size(); ++p) {
                for (uint32_t e = prev_last[p] + 1; e < k; ++e) {
                    out.emplace_back(prev[p]);
                    xor_into(out.back(), gamma_->row(e));
                    lst.push_back(e);
                    xors += 1;
                }
            }
        }
        built_ = lvl;
    }
    return xors;
}

// ------------------------------------------------------------- addition stack

AdditionStack::AdditionStack(const BitMatrix& gamma, uint32_t depth)
    : gamma_(&gamma), entries_(depth, BitVector(gamma.cols())) {
    if (depth == 0) throw std::invalid_argument("AdditionStack: depth must be >= 1");
}

uint64_t AdditionStack::rebuild_from(uint32_t level, const Combination& prefix) {
    uint64_t adds = 0;
    for (uint32_t i = level; i < entries_.size(); ++i) {
        if (i == 0) {
            entries_[0] = gamma_->row(prefix[0]);
        } else {
            assign_xor(entries_[i], entries_[i - 1], gamma_->row(prefix[i]));
            adds += 1;
        }
    }
    return adds;
}

// ------------------------------------------------------------ serial rounds

uint32_t round_basic(const BitMatrix& gamma, uint32_t g, RoundStats& rs) {
    check_round_args(gamma, g);
    if (g == 1) return scan_rows(gamma, rs);
    uint32_t best = NO_WEIGHT;
    BitVector sum(gamma.cols());
    auto cur = CombinationCursor::first(gamma.rows(), g, CombOrder::lex);
    while (true) {
        const Combination& c = cur.current();
        sum = gamma.row(c[0]);
        for (uint32_t i = 1; i < g; ++i) {
            xor_into(sum, gamma.row(c[i]));
            rs.additions += 1;
        }
        uint32_t w = weight(sum);
        rs.combinations += 1;
        if (w < best) best = w;
        if (!cur.next()) break;
    }
    return best;
}

uint32_t round_optimized(const BitMatrix& gamma, uint32_t g, RoundStats& rs) {
    check_round_args(gamma, g);
    if (g == 1) return scan_rows(gamma, rs);
    uint32_t k = gamma.rows();
    uint32_t best = NO_WEIGHT;
    BitVector sum(gamma.cols());
    Combination prefix(g - 1);
    for (uint32_t i = 0; i + 1 < g; ++i) prefix[i] = i;
    while (true) {
        sum = gamma.row(prefix[0]);
        for (uint32_t i = 1; i + 1 < g; ++i) {
            xor_into(sum, gamma.row(prefix[i]));
            rs.additions += 1;
        }
        for (uint32_t e = prefix.back() + 1; e < k; ++e) {
            uint32_t w = weight_of_xor(sum, gamma.row(e));
            rs.additions += 1;
            rs.combinations += 1;
            if (w < best) best = w;
        }
        if (advance_prefix(prefix, k) == prefix.size()) break;
    }
    return best;
}

uint32_t round_stack(const BitMatrix& gamma, uint32_t g, RoundStats& rs) {
    check_round_args(gamma, g);
    if (g == 1) return scan_rows(gamma, rs);
    uint32_t k = gamma.rows();
    uint32_t best = NO_WEIGHT;
    AdditionStack stack(gamma, g - 1);
    Combination prefix(g - 1);
    for (uint32_t i = 0; i + 1 < g; ++i) prefix[i] = i;
    uint32_t changed = 0;
    while (true) {
        rs.additions += stack.rebuild_from(changed, prefix);
        const BitVector& top = stack.top();
        for (uint32_t e = prefix.back() + 1; e < k; ++e) {
            uint32_t w = weight_of_xor(top, gamma.row(e));
            rs.additions += 1;
            rs.combinations += 1;
            if (w < best) best = w;
        }
        changed = advance_prefix(prefix, k);
        if (changed == prefix.size()) break;
    }
    return best;
}

// -------------------------------------------------------------- saved rounds

namespace {

// Walk over s-sized blocks with a terminal tail scan; shared by the saved
// and saved_unrolled rounds. `members` carries one candidate first block per
// unrolled lane (a single entry when not unrolling); `chain` collects the
// blocks picked on the way down. Each prefix sum is rebuilt from its blocks
// at the leaf, one XOR per link, so the addition count is exactly the cost
// model's (C(k-j, g-s*f) + f-1) per prefix.
struct SavedWalk {
    const SavedAdditions& sa;
    uint32_t k;
    uint32_t s;
    RoundStats& rs;
    uint32_t best = NO_WEIGHT;
    std::vector<const BitVector*> chain;
    std::vector<BitVector> acc; // one accumulator per unrolled lane

    SavedWalk(const SavedAdditions& table, RoundStats& stats, uint32_t g, uint32_t width)
        : sa(table), k(table.k()), s(table.s()), rs(stats),
          acc(width, BitVector(table.gamma().cols())) {
        chain.reserve(g / s + 2);
    }

    void descend(const std::vector<const BitVector*>& members, uint32_t width,
                 uint32_t last, uint32_t g_rem) {
        if (g_rem <= s) {
            for (uint32_t mIdx = 0; mIdx < width; ++mIdx) {
                acc[mIdx] = *members[mIdx];
                for (const BitVector* b : chain) {
                    xor_into(acc[mIdx], *b);
                    rs.additions += 1;
                }
            }
            uint64_t start = index_of(k, g_rem, static_cast<int64_t>(last));
            uint64_t end = sa.level_size(g_rem);
            for (uint64_t idx = start; idx < end; ++idx) {
                const BitVector& tail = sa.row(g_rem, idx);
                rs.accesses += 1;
                for (uint32_t mIdx = 0; mIdx < width; ++mIdx) {
                    uint32_t w = weight_of_xor(acc[mIdx], tail);
                    rs.additions += 1;
                    rs.combinations += 1;
                    if (w < best) best = w;
                }
            }
            return;
        }
        uint64_t start = index_of(k, s, static_cast<int64_t>(last));
        uint64_t end = index_of(k, s, static_cast<int64_t>(k) - g_rem);
        for (uint64_t idx = start; idx < end; ++idx) {
            uint32_t le = sa.last_element(s, idx);
            if (le + (g_rem - s) >= k) continue;
            rs.accesses += 1;
            chain.push_back(&sa.row(s, idx));
            descend(members, width, le, g_rem - s);
            chain.pop_back();
        }
    }
};

// Full level-g table scan; the saved rounds when g never leaves the table.
uint32_t scan_level(SavedAdditions& sa, uint32_t g, RoundStats& rs) {
    rs.table_additions += sa.ensure_level(g);
    uint32_t best = NO_WEIGHT;
    uint64_t size = sa.level_size(g);
    for (uint64_t idx = 0; idx < size; ++idx) {
        uint32_t w = weight(sa.row(g, idx));
        rs.accesses += 1;
        rs.combinations += 1;
        if (w < best) best = w;
    }
    return best;
}

} // namespace

uint32_t round_saved(SavedAdditions& sa, uint32_t g, RoundStats& rs) {
    uint32_t k = sa.k();
    if (g < 1 || g > k) throw std::invalid_argument("round: need 1 <= g <= k");
    uint32_t s = sa.s();
    if (g <= s) return scan_level(sa, g, rs);
    rs.table_additions += sa.ensure_level(s);
    SavedWalk walk(sa, rs, g, 1);
    std::vector<const BitVector*> accs(1);
    uint64_t end = index_of(k, s, static_cast<int64_t>(k) - g);
    for (uint64_t idx = 0; idx < end; ++idx) {
        uint32_t le = sa.last_element(s, idx);
        if (le + (g - s) >= k) continue;
        rs.accesses += 1;
        accs[0] = &sa.row(s, idx);
        walk.descend(accs, 1, le, g - s);
    }
    return walk.best;
}

uint32_t round_saved_unrolled(SavedAdditions& sa, uint32_t g, uint32_t unroll, RoundStats& rs) {
    uint32_t k = sa.k();
    if (g < 1 || g > k) throw std::invalid_argument("round: need 1 <= g <= k");
    if (unroll < 1) throw std::invalid_argument("round: unroll must be >= 1");
    uint32_t s = sa.s();
    if (g <= s) return scan_level(sa, g, rs);
    // Single-element blocks never share a last element, so the grouped walk
    // degenerates to the plain one.
    if (s == 1 || unroll == 1) return round_saved(sa, g, rs);
    rs.table_additions += sa.ensure_level(s);
    SavedWalk walk(sa, rs, g, unroll);
    std::vector<const BitVector*> accs;
    Combination full(s);
    // First element slowest, then the block's last element; the middle
    // indices run lexicographically, giving runs that share the last element
    // (hence the same right-hand ranges) for the groups to exploit.
    for (uint32_t first = 0; first + g <= k; ++first) {
        for (uint32_t last = first + s - 1; last + (g - s) < k; ++last) {
            // middles: (s-2)-subsets of {first+1 .. last-1}, lex
            Combination mid(s - 2);
            for (uint32_t i = 0; i + 2 < s; ++i) mid[i] = first + 1 + i;
            bool more = true;
            while (more) {
                accs.clear();
                for (uint32_t u = 0; u < unroll && more; ++u) {
                    full[0] = first;
                    for (uint32_t i = 0; i + 2 < s; ++i) full[i + 1] = mid[i];
                    full[s - 1] = last;
                    uint64_t idx = combination_rank(k, full);
                    rs.accesses += 1;
                    accs.push_back(&sa.row(s, idx));
                    // lex successor of mid inside the open interval
                    more = false;
                    uint32_t msize = static_cast<uint32_t>(mid.size());
                    for (uint32_t i = msize; i-- > 0;) {
                        if (mid[i] < (last - 1) - (msize - 1 - i)) {
                            ++mid[i];
                            for (uint32_t j = i + 1; j < msize; ++j)
                                mid[j] = mid[j - 1] + 1;
                            more = true;
                            break;
                        }
                    }
                }
                walk.descend(accs, static_cast<uint32_t>(accs.size()), last, g - s);
            }
        }
    }
    return walk.best;
}

uint32_t round_saved_parallel(SavedAdditions& sa, uint32_t g, uint32_t workers, RoundStats& rs) {
    uint32_t k = sa.k();
    if (g < 1 || g > k) throw std::invalid_argument("round: need 1 <= g <= k");
    uint32_t s = sa.s();
    if (g <= s || workers <= 1) return round_saved(sa, g, rs);
    rs.table_additions += sa.ensure_level(s);

    std::vector<uint64_t> blocks;
    uint64_t end = index_of(k, s, static_cast<int64_t>(k) - g);
    for (uint64_t idx = 0; idx < end; ++idx) {
        if (sa.last_element(s, idx) + (g - s) < k) blocks.push_back(idx);
    }
    uint32_t threads = static_cast<uint32_t>(std::min<uint64_t>(workers, blocks.size()));
    std::atomic<uint64_t> cursor{0};
    std::vector<uint32_t> mins(threads, NO_WEIGHT);
    std::vector<RoundStats> locals(threads);
    std::vector<std::exception_ptr> errors(threads);
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (uint32_t t = 0; t < threads; ++t) {
        pool.emplace_back([&, t] {
            try {
                SavedWalk walk(sa, locals[t], g, 1);
                std::vector<const BitVector*> accs(1);
                while (true) {
                    uint64_t i = cursor.fetch_add(1);
                    if (i >= blocks.size()) break;
                    uint64_t idx = blocks[i];
                    locals[t].accesses += 1;
                    accs[0] = &sa.row(s, idx);
                    walk.descend(accs, 1, sa.last_element(s, idx), g - s);
                }
                mins[t] = walk.best;
            } catch (...) {
                errors[t] = std::current_exception();
            }
        });
    }
    for (auto& th : pool) th.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);

    uint32_t best = NO_WEIGHT;
    for (uint32_t t = 0; t < threads; ++t) {
        if (mins[t] < best) best = mins[t];
        rs.additions += locals[t].additions;
        rs.combinations += locals[t].combinations;
        rs.accesses += locals[t].accesses;
    }
    return best;
}

// ------------------------------------------------------------------ BZ loop

EngineResult run_bz_loop(const GammaSet& gs, Bounds bounds, const RoundRunner& round) {
    uint32_t k = gs.k();
    uint32_t m = gs.m();
    uint32_t U = bounds.upper;
    uint32_t L = bounds.lower < 1 ? 1 : bounds.lower;
    EngineResult res;
    bool done = U <= L;
    for (uint32_t g = 1; !done && g <= k; ++g) {
        for (uint32_t j = 0; j < m; ++j) {
            if (U <= L) { // fast path: the bound already meets the best find
                done = true;
                break;
            }
            RoundStats rs;
            rs.g = g;
            rs.gamma_index = j;
            uint32_t w = round(j, g, rs);
            res.stats.absorb(rs);
            res.stats.per_g.push_back(rs);
            res.stats.g_final = g;
            if (w < U) U = w;
        }
        if (done) break;
        uint32_t nl = lower_bound(m, g, k, gs.k_last);
        if (nl > L) L = nl;
        if (L >= U) done = true;
    }
    res.d = U;
    return res;
}

// ------------------------------------------------------------------- engines

EngineResult brute_force_gray(const BitMatrix& G, const EngineConfig& config) {
    config.validate();
    uint32_t k = G.rows();
    uint32_t n = G.cols();
    if (k == 0) throw std::invalid_argument("brute force: matrix has no rows");
    if (k > config.brute_cap)
        throw BruteCapError("brute force: k = " + std::to_string(k) + " exceeds cap " +
                            std::to_string(config.brute_cap) +
                            "; use a Brouwer-Zimmermann engine");
    uint64_t total = (uint64_t{1} << k) - 1;
    EngineResult res;
    uint32_t workers = config.workers;
    if (workers > total) workers = static_cast<uint32_t>(total);

    if (workers <= 1) {
        BitVector acc(n);
        uint32_t best = NO_WEIGHT;
        for (uint64_t i = 1; i <= total; ++i) {
            xor_into(acc, G.row(gray_diff(i)));
            res.stats.row_additions += 1;
            uint32_t w = weight(acc);
            res.stats.combinations += 1;
            if (w < best) best = w;
        }
        res.d = best;
        return res;
    }

    // Contiguous index blocks; each worker seeds its first codeword from the
    // Gray code of its block start, then walks single-flip increments.
    uint64_t base = total / workers, rem = total % workers;
    std::vector<uint32_t> mins(workers, NO_WEIGHT);
    std::vector<uint64_t> adds(workers, 0), combs(workers, 0);
    std::vector<std::exception_ptr> errors(workers);
    std::vector<std::thread> pool;
    pool.reserve(workers);
    uint64_t lo = 1;
    for (uint32_t t = 0; t < workers; ++t) {
        uint64_t count = base + (t < rem ? 1 : 0);
        uint64_t hi = lo + count;
        pool.emplace_back([&, t, lo, hi] {
            try {
                BitVector acc(n);
                uint64_t seed = gray_code(lo);
                for (uint32_t b = 0; b < k; ++b) {
                    if (seed >> b & 1) {
                        xor_into(acc, G.row(b));
                        adds[t] += 1;
                    }
                }
                uint32_t best = weight(acc);
                combs[t] += 1;
                for (uint64_t i = lo + 1; i < hi; ++i) {
                    xor_into(acc, G.row(gray_diff(i)));
                    adds[t] += 1;
                    uint32_t w = weight(acc);
                    combs[t] += 1;
                    if (w < best) best = w;
                }
                mins[t] = best;
            } catch (...) {
                errors[t] = std::current_exception();
            }
        });
        lo = hi;
    }
    for (auto& th : pool) th.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);

    uint32_t best = NO_WEIGHT;
    for (uint32_t t = 0; t < workers; ++t) {
        if (mins[t] < best) best = mins[t];
        res.stats.row_additions += adds[t];
        res.stats.combinations += combs[t];
    }
    res.d = best;
    return res;
}

EngineResult bz_basic(const GammaSet& gs, Bounds bounds, const EngineConfig& config) {
    config.validate();
    return run_bz_loop(gs, bounds, [&](uint32_t j, uint32_t g, RoundStats& rs) {
        return round_basic(gs.gammas[j], g, rs);
    });
}

EngineResult bz_optimized(const GammaSet& gs, Bounds bounds, const EngineConfig& config) {
    config.validate();
    return run_bz_loop(gs, bounds, [&](uint32_t j, uint32_t g, RoundStats& rs) {
        return round_optimized(gs.gammas[j], g, rs);
    });
}

EngineResult bz_stack(const GammaSet& gs, Bounds bounds, const EngineConfig& config) {
    config.validate();
    return run_bz_loop(gs, bounds, [&](uint32_t j, uint32_t g, RoundStats& rs) {
        return round_stack(gs.gammas[j], g, rs);
    });
}

namespace {

std::vector<SavedAdditions> build_tables(const GammaSet& gs, const EngineConfig& config) {
    unsigned __int128 need = 0;
    for (const auto& gamma : gs.gammas)
        need += SavedAdditions::estimate_bytes(gamma.rows(), gamma.cols(), config.s);
    if (need > config.memory_cap_bytes)
        throw MemoryCapError("saved-additions tables need " + u128_to_string(need) +
                             " bytes across " + std::to_string(gs.m()) +
                             " gammas, cap is " + std::to_string(config.memory_cap_bytes));
    std::vector<SavedAdditions> tables;
    tables.reserve(gs.m());
    for (const auto& gamma : gs.gammas)
        tables.emplace_back(gamma, config.s, config.memory_cap_bytes);
    return tables;
}

} // namespace

EngineResult bz_saved(const GammaSet& gs, Bounds bounds, const EngineConfig& config) {
    config.validate();
    auto tables = build_tables(gs, config);
    return run_bz_loop(gs, bounds, [&](uint32_t j, uint32_t g, RoundStats& rs) {
        if (config.workers > 1) return round_saved_parallel(tables[j], g, config.workers, rs);
        return round_saved(tables[j], g, rs);
    });
}

EngineResult bz_saved_unrolled(const GammaSet& gs, Bounds bounds, const EngineConfig& config) {
    config.validate();
    auto tables = build_tables(gs, config);
    return run_bz_loop(gs, bounds, [&](uint32_t j, uint32_t g, RoundStats& rs) {
        return round_saved_unrolled(tables[j], g, config.unroll, rs);
    });
}

MinWeightResult min_weight(const BitMatrix& G, const EngineConfig& config) {
    config.validate();
    BitMatrix B = row_basis(G);
    MinWeightResult out;
    out.gamma.effective_k = B.rows();

    if (config.algorithm == Algorithm::brute_gray) {
        EngineResult er = brute_force_gray(B, config);
        out.d = er.d;
        out.stats = std::move(er.stats);
        return out;
    }

    GammaSet gs = best_gamma_over_permutations(B, config.permutation_trials, config.seed);
    Bounds bounds;
    bounds.lower = 1;
    bounds.upper = singleton_upper(B.cols(), B.rows());
    EngineResult er;
    switch (config.algorithm) {
        case Algorithm::basic:          er = bz_basic(gs, bounds, config); break;
        case Algorithm::optimized:      er = bz_optimized(gs, bounds, config); break;
        case Algorithm::stack:          er = bz_stack(gs, bounds, config); break;
        case Algorithm::saved:          er = bz_saved(gs, bounds, config); break;
        case Algorithm::saved_unrolled: er = bz_saved_unrolled(gs, bounds, config); break;
        case Algorithm::brute_gray:     throw std::logic_error("unreachable");
    }
    out.d = er.d;
    out.stats = std::move(er.stats);
    out.gamma.m = gs.m();
    out.gamma.k_last = gs.k_last;
    return out;
}

} // namespace md
