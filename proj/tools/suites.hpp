/**
 * @file suites.hpp
 * @brief Verification suites behind the `verify` subcommand: each runs one
 *        family of identity checks up to a bound and reports failures.
 *
 * Independent units (per level d or per exponent n) fan out across worker
 * threads; failures merge deterministically, sorted by check id.
 */
#pragma once

#include "icb/serialize.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace icb::suites {

struct Failure {
    std::string check_id;
    std::string inputs;
    std::string expected;
    std::string actual;
};

struct SuiteReport {
    std::string suite;
    std::vector<std::pair<std::string, std::string>> params;
    std::uint64_t checks = 0;
    std::vector<Failure> failures;
    double wall_time = 0.0;

    bool ok() const { return failures.empty(); }
};

struct SuiteOptions {
    int jobs = 0;                       // <= 0: ICB_JOBS env var, else hardware
    bool log_rewrites = false;          // lemma-a only
    std::ostream* log_sink = nullptr;   // JSONL target when log_rewrites is set
};

SuiteReport run_lemma_a(std::int64_t max_n, const SuiteOptions& opts = {});
SuiteReport run_qstep(std::int64_t max_d, const SuiteOptions& opts = {});
SuiteReport run_remark2(std::int64_t max_d, const SuiteOptions& opts = {});
SuiteReport run_transfer(std::int64_t max_d, const SuiteOptions& opts = {});
SuiteReport run_positivity(std::int64_t max_d, const SuiteOptions& opts = {});
SuiteReport run_cb_image(std::int64_t max_d, const SuiteOptions& opts = {});
SuiteReport run_basis(std::int64_t max_d, const SuiteOptions& opts = {});
SuiteReport run_bar(std::int64_t max_d, const SuiteOptions& opts = {});

extern const std::vector<std::string> kSuiteNames;  // excluding "all"

/// Dispatch by suite name ("all" runs every suite at its default bound).
/// Throws std::invalid_argument for unknown names.
std::vector<SuiteReport> run_suite(const std::string& name,
                                   std::optional<std::int64_t> max_d,
                                   std::optional<std::int64_t> max_n,
                                   const SuiteOptions& opts = {});

/// 0 when every report is clean, 1 otherwise.
int exit_code(const std::vector<SuiteReport>& reports);

ordered_json to_json(const SuiteReport& report);

int default_jobs();

}  // namespace icb::suites
