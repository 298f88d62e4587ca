#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mindist/engines.hpp"

// Prefix-based round scheduling: each task is the set of g-combinations that
// share a leading p-tuple, handed to an in-process worker pool either
// dynamically (shared queue, message-counted) or by static deal.

namespace md {

enum class ScheduleMode { serial, dynamic, dynamic_2cm, static_cyclic, static_snake };

const char* schedule_name(ScheduleMode m);
ScheduleMode schedule_from_name(const std::string& name);

// One task: the leading p indices every combination in the task starts with.
struct Prefix {
    Combination indices;
};

struct ScheduleConfig {
    ScheduleMode mode = ScheduleMode::serial;
    CombOrder order = CombOrder::lex; // prefix enumeration: lex or left_lex
    uint32_t workers = 1;
    // Dynamic modes read this as the absolute prefix size (default 3).
    // Static modes subtract it from g (default 4), so prefixes grow with the
    // round and the suffix stays a fixed size.
    uint32_t prefix_param = 0; // 0 picks the mode default

    void validate() const;
    // Actual prefix size for a round, or 0 when the round cannot be split
    // (the suffix needs at least one free index) and stays serial.
    uint32_t resolve_prefix(uint32_t g) const;
};

// Number of tasks: C(k-(g-p), p). Prefix elements stay at most
// k-1-(g-p) so every prefix leaves room for its suffix.
uint64_t prefix_count(uint32_t k, uint32_t g, uint32_t p);

std::vector<Prefix> enumerate_prefixes(uint32_t k, uint32_t g, uint32_t p, CombOrder order);

// Node engine: completes every g-combination beginning with the prefix,
// walking the suffixes with an addition stack seeded by the prefix row sum.
uint32_t process_prefix(const Prefix& prefix, const BitMatrix& gamma, uint32_t g,
                        RoundStats& rs);

// Deal of task indices 0..count-1 to workers: cyclic, or boustrophedon
// (every other row of the deal reversed) when snake is set.
std::vector<std::vector<uint64_t>> assign_static(uint64_t count, uint32_t workers, bool snake);

// Dynamic coordinator: workers pull batches from a shared queue. batch = 1
// hands single tasks; batch = 2 hands front+back pairs. Every handed batch
// costs two messages (work out, result back); the final stop marker is free.
uint32_t run_dynamic(const std::vector<Prefix>& tasks, const BitMatrix& gamma, uint32_t g,
                     uint32_t workers, uint32_t batch, RoundStats& rs);

// One (g, Gamma) round under the configured schedule; rounds the config
// cannot split fall back to the serial stack walk with zero messages.
uint32_t scheduled_round(const BitMatrix& gamma, uint32_t g, const ScheduleConfig& cfg,
                         RoundStats& rs);

// min_weight with scheduled rounds; serial mode defers to the engine the
// EngineConfig names. The bound loop and Gamma search are unchanged.
MinWeightResult min_weight_scheduled(const BitMatrix& G, const EngineConfig& ecfg,
                                     const ScheduleConfig& scfg);

} // namespace md
