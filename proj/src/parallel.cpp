#include "mindist/parallel.hpp"

#include <atomic>
#include <exception>
#include <limits>
#include <stdexcept>
#include <thread>

namespace md {

namespace {

constexpr uint32_t NO_WEIGHT = std::numeric_limits<uint32_t>::max();

struct LocalRun {
    RoundStats stats;
    uint32_t best = NO_WEIGHT;
};

// Join a worker pool, rethrow the first worker failure, fold local results.
void merge_locals(std::vector<std::thread>& pool, std::vector<std::exception_ptr>& errors,
                  const std::vector<LocalRun>& locals, RoundStats& rs, uint32_t& best) {
    for (auto& th : pool) th.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    for (const auto& lr : locals) {
        rs.additions += lr.stats.additions;
        rs.combinations += lr.stats.combinations;
        if (lr.best < best) best = lr.best;
    }
}

} // namespace

const char* schedule_name(ScheduleMode m) {
    switch (m) {
        case ScheduleMode::serial:        return "serial";
        case ScheduleMode::dynamic:       return "dynamic";
        case ScheduleMode::dynamic_2cm:   return "dynamic_2cm";
        case ScheduleMode::static_cyclic: return "static_cyclic";
        case ScheduleMode::static_snake:  return "static_snake";
    }
    throw std::logic_error("schedule_name: unknown mode");
}

ScheduleMode schedule_from_name(const std::string& name) {
    if (name == "serial") return ScheduleMode::serial;
    if (name == "dynamic") return ScheduleMode::dynamic;
    if (name == "dynamic_2cm") return ScheduleMode::dynamic_2cm;
    if (name == "static_cyclic") return ScheduleMode::static_cyclic;
    if (name == "static_snake") return ScheduleMode::static_snake;
    throw std::invalid_argument("unknown schedule: " + name);
}

void ScheduleConfig::validate() const {
    if (workers < 1)
        throw std::invalid_argument("schedule: workers must be >= 1");
    if (order == CombOrder::unroll)
        throw std::invalid_argument("schedule: prefix order must be lex or left_lex");
}

uint32_t ScheduleConfig::resolve_prefix(uint32_t g) const {
    if (mode == ScheduleMode::serial) return 0;
    if (mode == ScheduleMode::dynamic || mode == ScheduleMode::dynamic_2cm) {
        uint32_t p = prefix_param == 0 ? 3 : prefix_param;
        return (p < g) ? p : 0;
    }
    uint32_t rel = prefix_param == 0 ? 4 : prefix_param;
    return (g > rel) ? g - rel : 0;
}

uint64_t prefix_count(uint32_t k, uint32_t g, uint32_t p) {
    if (p < 1 || p >= g || g > k)
        throw std::invalid_argument("prefix_count: need 1 <= p < g <= k");
    return binomial(k - (g - p), p);
}

std::vector<Prefix> enumerate_prefixes(uint32_t k, uint32_t g, uint32_t p, CombOrder order) {
    uint64_t count = prefix_count(k, g, p); // validates the arguments
    std::vector<Prefix> out;
    out.reserve(count);
    auto cur = CombinationCursor::first(k - (g - p), p, order);
    while (true) {
        out.push_back(Prefix{cur.current()});
        if (!cur.next()) break;
    }
    return out;
}

uint32_t process_prefix(const Prefix& prefix, const BitMatrix& gamma, uint32_t g,
                        RoundStats& rs) {
    uint32_t k = gamma.rows();
    uint32_t p = static_cast<uint32_t>(prefix.indices.size());
    if (p < 1 || p >= g || g > k)
        throw std::invalid_argument("process_prefix: need 1 <= p < g <= k");
    uint32_t suffix = g - p;
    uint32_t last_p = prefix.indices.back();

    BitVector seed = gamma.row(prefix.indices[0]);
    for (uint32_t i = 1; i < p; ++i) {
        xor_into(seed, gamma.row(prefix.indices[i]));
        rs.additions += 1;
    }

    uint32_t best = NO_WEIGHT;
    if (suffix == 1) {
        for (uint32_t e = last_p + 1; e < k; ++e) {
            uint32_t w = weight_of_xor(seed, gamma.row(e));
            rs.additions += 1;
            rs.combinations += 1;
            if (w < best) best = w;
        }
        return best;
    }

    // Stack over the first suffix-1 elements, drawn from (last_p, k-2]; the
    // final element is fused into the weight evaluation. Entry 0 XORs onto
    // the seed, so unlike a from-scratch stack it costs an addition too.
    std::vector<BitVector> stack(suffix - 1, BitVector(gamma.cols()));
    Combination tail(suffix - 1);
    for (uint32_t i = 0; i + 1 < suffix; ++i) tail[i] = last_p + 1 + i;
    uint32_t changed = 0;
    while (true) {
        for (uint32_t i = changed; i + 1 < suffix; ++i) {
            const BitVector& base = (i == 0) ? seed : stack[i - 1];
            stack[i] = base;
            xor_into(stack[i], gamma.row(tail[i]));
            rs.additions += 1;
        }
        const BitVector& top = stack[suffix - 2];
        for (uint32_t e = tail.back() + 1; e < k; ++e) {
            uint32_t w = weight_of_xor(top, gamma.row(e));
            rs.additions += 1;
            rs.combinations += 1;
            if (w < best) best = w;
        }
        // lex successor of tail inside (last_p, k-2]
        uint32_t tsize = suffix - 1;
        changed = tsize;
        for (uint32_t i = tsize; i-- > 0;) {
            if (tail[i] < (k - 2) - (tsize - 1 - i)) {
                ++tail[i];
                for (uint32_t j = i + 1; j < tsize; ++j) tail[j] = tail[j - 1] + 1;
                changed = i;
                break;
            }
        }
        if (changed == tsize) break;
    }
    return best;
}

std::vector<std::vector<uint64_t>> assign_static(uint64_t count, uint32_t workers, bool snake) {
    if (workers < 1) throw std::invalid_argument("assign_static: workers must be >= 1");
    std::vector<std::vector<uint64_t>> out(workers);
    for (uint64_t i = 0; i < count; ++i) {
        uint64_t row = i / workers;
        uint32_t col = static_cast<uint32_t>(i % workers);
        uint32_t t = (!snake || row % 2 == 0) ? col : workers - 1 - col;
        out[t].push_back(i);
    }
    return out;
}

uint32_t run_dynamic(const std::vector<Prefix>& tasks, const BitMatrix& gamma, uint32_t g,
                     uint32_t workers, uint32_t batch, RoundStats& rs) {
    if (batch < 1 || batch > 2)
        throw std::invalid_argument("run_dynamic: batch must be 1 or 2");
    if (workers < 1)
        throw std::invalid_argument("run_dynamic: workers must be >= 1");

    struct Batch {
        uint64_t a;
        int64_t b; // -1 when the batch holds a single task
    };
    std::vector<Batch> batches;
    uint64_t n_tasks = tasks.size();
    if (batch == 1) {
        batches.reserve(n_tasks);
        for (uint64_t i = 0; i < n_tasks; ++i) batches.push_back({i, -1});
    } else {
        // front+back pairing: the cheap early prefixes ride with the short
        // late ones, which evens the batch costs out
        batches.reserve((n_tasks + 1) / 2);
        uint64_t f = 0, b = n_tasks;
        while (b - f >= 2) {
            batches.push_back({f, static_cast<int64_t>(b - 1)});
            ++f;
            --b;
        }
        if (b - f == 1) batches.push_back({f, -1});
    }
    rs.messages += 2 * batches.size();

    uint32_t threads = static_cast<uint32_t>(
        std::min<uint64_t>(workers, batches.empty() ? 1 : batches.size()));
    std::atomic<uint64_t> next{0};
    std::vector<LocalRun> locals(threads);
    std::vector<std::exception_ptr> errors(threads);
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (uint32_t t = 0; t < threads; ++t) {
        pool.emplace_back([&, t] {
            try {
                while (true) {
                    uint64_t i = next.fetch_add(1);
                    if (i >= batches.size()) break;
                    const Batch& bt = batches[i];
                    uint32_t w = process_prefix(tasks[bt.a], gamma, g, locals[t].stats);
                    if (w < locals[t].best) locals[t].best = w;
                    if (bt.b >= 0) {
                        w = process_prefix(tasks[static_cast<uint64_t>(bt.b)], gamma, g,
                                           locals[t].stats);
                        if (w < locals[t].best) locals[t].best = w;
                    }
                }
            } catch (...) {
                errors[t] = std::current_exception();
            }
        });
    }
    uint32_t best = NO_WEIGHT;
    merge_locals(pool, errors, locals, rs, best);
    return best;
}

namespace {

uint32_t run_static(const std::vector<Prefix>& tasks, const BitMatrix& gamma, uint32_t g,
                    uint32_t workers, bool snake, RoundStats& rs) {
    auto deal = assign_static(tasks.size(), workers, snake);
    uint32_t threads = static_cast<uint32_t>(deal.size());
    std::vector<LocalRun> locals(threads);
    std::vector<std::exception_ptr> errors(threads);
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (uint32_t t = 0; t < threads; ++t) {
        pool.emplace_back([&, t] {
            try {
                for (uint64_t idx : deal[t]) {
                    uint32_t w = process_prefix(tasks[idx], gamma, g, locals[t].stats);
                    if (w < locals[t].best) locals[t].best = w;
                }
            } catch (...) {
                errors[t] = std::current_exception();
            }
        });
    }
    uint32_t best = NO_WEIGHT;
    merge_locals(pool, errors, locals, rs, best);
    return best;
}

} // namespace

uint32_t scheduled_round(const BitMatrix& gamma, uint32_t g, const ScheduleConfig& cfg,
                         RoundStats& rs) {
    cfg.validate();
    uint32_t p = cfg.resolve_prefix(g);
    if (p == 0) return round_stack(gamma, g, rs);
    auto tasks = enumerate_prefixes(gamma.rows(), g, p, cfg.order);
    switch (cfg.mode) {
        case ScheduleMode::dynamic:
            return run_dynamic(tasks, gamma, g, cfg.workers, 1, rs);
        case ScheduleMode::dynamic_2cm:
            return run_dynamic(tasks, gamma, g, cfg.workers, 2, rs);
        case ScheduleMode::static_cyclic:
            return run_static(tasks, gamma, g, cfg.workers, false, rs);
        case ScheduleMode::static_snake:
            return run_static(tasks, gamma, g, cfg.workers, true, rs);
        case ScheduleMode::serial:
            break; // resolve_prefix already returned 0
    }
    throw std::logic_error("scheduled_round: unreachable");
}

MinWeightResult min_weight_scheduled(const BitMatrix& G, const EngineConfig& ecfg,
                                     const ScheduleConfig& scfg) {
    ecfg.validate();
    scfg.validate();
    if (scfg.mode == ScheduleMode::serial) return min_weight(G, ecfg);

    BitMatrix B = row_basis(G);
    MinWeightResult out;
    out.gamma.effective_k = B.rows();
    GammaSet gs = best_gamma_over_permutations(B, ecfg.permutation_trials, ecfg.seed);
    Bounds bounds;
    bounds.lower = 1;
    bounds.upper = singleton_upper(B.cols(), B.rows());
    EngineResult er = run_bz_loop(gs, bounds, [&](uint32_t j, uint32_t g, RoundStats& rs) {
        return scheduled_round(gs.gammas[j], g, scfg, rs);
    });
    out.d = er.d;
    out.stats = std::move(er.stats);
    out.gamma.m = gs.m();
    out.gamma.k_last = gs.k_last;
    return out;
}

} // namespace md
