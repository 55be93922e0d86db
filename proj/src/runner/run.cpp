#include "nng/runner/run.hpp"

#include <omp.h>

#include <chrono>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <sstream>

#include "nng/errors.hpp"
#include "nng/runner/output.hpp"

namespace nng::runner {

namespace fs = std::filesystem;

namespace {

std::string utc_now() {
    const std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

Json checks_json(const std::vector<Check>& checks) {
    Json out = Json::array();
    for (const Check& c : checks) {
        out.push_back({{"name", c.name}, {"value", c.value}, {"rule", c.rule}, {"threshold", c.threshold},
                       {"passed", c.passed}});
    }
    return out;
}

std::string resolved_text(const ScenarioConfig& cfg) {
    std::ostringstream out;
    for (const auto& [key, value] : cfg.resolved()) out << key << " = " << value << '\n';
    return out.str();
}

void write_json(const fs::path& path, const Json& j) { write_text(path, j.dump(2) + "\n"); }

} // namespace

int configured_threads() {
    if (const char* env = std::getenv("NNG_NUM_THREADS")) {
        char* end = nullptr;
        const long n = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && n > 0) return static_cast<int>(n);
    }
    return omp_get_max_threads();
}

RunOutcome run(const ScenarioConfig& cfg, const fs::path& out_dir) {
    RunOutcome outcome;
    const std::string started = utc_now();
    const int threads = configured_threads();
    omp_set_num_threads(threads);

    Json resolved = Json::object();
    for (const auto& [key, value] : cfg.resolved()) resolved[key] = value;

    std::vector<fs::path> files;
    Json diagnostics = Json::array();
    try {
        fs::create_directories(out_dir);
    } catch (const fs::filesystem_error& e) {
        outcome.exit_code = exit_io;
        outcome.status = "io_error";
        outcome.message = e.what();
        return outcome;
    }

    auto fail = [&](int code, const char* status, const std::string& what) {
        outcome.exit_code = code;
        outcome.status = status;
        outcome.message = what;
        diagnostics.push_back({{"error", status}, {"message", what}});
    };

    try {
        write_text(out_dir / "config.resolved", resolved_text(cfg));
        files.push_back(out_dir / "config.resolved");

        ScenarioResult result = run_scenario(cfg, out_dir);
        Json summary = Json::object();
        summary["scenario"] = std::string(to_string(cfg.scenario));
        summary["passed"] = result.passed();
        summary["checks"] = checks_json(result.checks);
        summary["results"] = result.summary;
        write_json(out_dir / "summary.json", summary);
        files.push_back(out_dir / "summary.json");
        files.insert(files.end(), result.files.begin(), result.files.end());

        if (result.passed()) {
            outcome.status = "ok";
        } else {
            std::string failed;
            for (const Check& c : result.checks) {
                if (!c.passed) failed += (failed.empty() ? "" : ", ") + c.name;
            }
            fail(exit_numerical, "checks_failed", "failed checks: " + failed);
        }
    } catch (const ValidationError& e) {
        fail(exit_validation, "validation_error", e.what());
    } catch (const NumericalError& e) {
        fail(exit_numerical, "numerical_error", e.what());
    } catch (const IoError& e) {
        fail(exit_io, "io_error", e.what());
    } catch (const fs::filesystem_error& e) {
        fail(exit_io, "io_error", e.what());
    } catch (const std::bad_alloc&) {
        fail(exit_numerical, "numerical_error", "out of memory");
    }

    Json file_list = Json::array();
    for (const fs::path& f : files) {
        std::error_code ec;
        const auto size = fs::file_size(f, ec);
        if (ec) continue;
        file_list.push_back({{"path", fs::relative(f, out_dir).generic_string()},
                             {"bytes", size},
                             {"sha256", sha256_file(f)}});
    }

    Json manifest = Json::object();
    manifest["version"] = NNG_VERSION;
    manifest["scenario"] = std::string(to_string(cfg.scenario));
    manifest["config"] = resolved;
    manifest["started"] = started;
    manifest["finished"] = utc_now();
    manifest["worker_threads"] = threads;
    manifest["status"] = outcome.status;
    manifest["exit_code"] = outcome.exit_code;
    manifest["files"] = file_list;
    manifest["diagnostics"] = diagnostics;
    outcome.manifest = manifest;
    try {
        write_json(out_dir / "manifest.json", manifest);
    } catch (const IoError& e) {
        outcome.exit_code = exit_io;
        outcome.status = "io_error";
        outcome.message = e.what();
    }
    return outcome;
}

RunOutcome run_config_file(const fs::path& config, const fs::path& out_dir) {
    try {
        const ScenarioConfig cfg = load_config(config);
        return run(cfg, out_dir);
    } catch (const ValidationError& e) {
        return {exit_validation, "validation_error", e.what(), Json::object()};
    } catch (const IoError& e) {
        return {exit_io, "io_error", e.what(), Json::object()};
    }
}

} // namespace nng::runner
