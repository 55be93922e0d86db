#pragma once

#include <filesystem>
#include <string>

#include "nng/runner/config.hpp"
#include "nng/runner/scenarios.hpp"

namespace nng::runner {

enum ExitCode : int {
    exit_ok = 0,
    exit_validation = 1,
    exit_numerical = 2,
    exit_io = 3,
};

struct RunOutcome {
    int exit_code = exit_ok;
    std::string status;       // "ok", "checks_failed", "validation_error", ...
    std::string message;
    Json manifest;
};

// Worker threads from NNG_NUM_THREADS, falling back to the OpenMP default.
int configured_threads();

/// Runs a scenario into `out_dir` and writes summary.json,
/// config.resolved and, last, manifest.json. Never throws for scenario
/// failures; they are mapped onto the exit code.
RunOutcome run(const ScenarioConfig& cfg, const std::filesystem::path& out_dir);

// Same, with the failure of config parsing folded into the outcome.
RunOutcome run_config_file(const std::filesystem::path& config, const std::filesystem::path& out_dir);

} // namespace nng::runner
