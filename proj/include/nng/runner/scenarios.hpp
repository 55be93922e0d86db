#pragma once

#include <filesystem>
#include <json.hpp>
#include <string>
#include <vector>

#include "nng/metaevolve.hpp"
#include "nng/runner/config.hpp"

namespace nng::runner {

using Json = nlohmann::ordered_json;

/// A scenario-level pass/fail check. `passed` encodes the comparison of
/// `value` against `threshold` stated in `rule`.
struct Check {
    std::string name;
    double value = 0.0;
    double threshold = 0.0;
    std::string rule;
    bool passed = false;
};

struct ScenarioResult {
    Json summary = Json::object();
    std::vector<std::filesystem::path> files;
    std::vector<Check> checks;

    bool passed() const;
};

/// Structural invariants over every recorded snapshot of an evolution.
struct InvariantSummary {
    std::size_t snapshots = 0;
    double max_norm_error = 0.0;        // |norm - 1|
    double max_step_norm_drift = 0.0;
    double max_step_norm_increase = 0.0;
    double max_trace_error = 0.0;       // |Tr rho - 1|
    double max_hermiticity = 0.0;
    double min_eigenvalue = 0.0;
    double max_exchange_asymmetry = 0.0;
    bool norms_non_increasing = true;   // up to kNormRoundoff per step
};

InvariantSummary summarize_invariants(const EvolutionRecord& record);
// Appends the invariant checks with the given prefix. Absorbing runs check
// the per-step norm decrease instead of norm and trace conservation.
void add_invariant_checks(const InvariantSummary& inv, const std::string& prefix, Boundary boundary,
                          std::vector<Check>& checks);
Json to_json(const InvariantSummary& inv);

/// Executes one scenario, writing its outputs (not the manifest) into
/// `out_dir`. Scientific outputs depend only on the config.
ScenarioResult run_scenario(const ScenarioConfig& cfg, const std::filesystem::path& out_dir);

} // namespace nng::runner
