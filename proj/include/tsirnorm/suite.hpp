#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace tsir::suite {

struct SuiteOptions {
    std::uint64_t seed = 1;
    int count = 40;  // base number of randomized cases per category
    int max_support = 20;
    int oracle_max = 8;
    int threads = 0;  // 0: hardware concurrency
};

struct CaseResult {
    std::string id;
    int pass = 0;
    int fail = 0;
    std::string note;  // first failure, or a summary metric
};

struct SuiteReport {
    SuiteOptions options;
    std::vector<CaseResult> cases;  // sorted by id
    bool all_pass = true;
    long long timing_ms = 0;
};

/// Runs the full invariants-and-properties battery with a seeded generator.
/// Categories run concurrently (each owns its RNG and evaluation sessions);
/// the report is assembled in sorted order, so identical seeds give
/// byte-identical renderings modulo the timing field.
SuiteReport run_suite(const SuiteOptions& options);

std::string render_text(const SuiteReport& report);
nlohmann::json render_json(const SuiteReport& report);
std::string render_csv(const SuiteReport& report);

}  // namespace tsir::suite
