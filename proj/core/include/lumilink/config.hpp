#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "lumilink/params.hpp"
#include "lumilink/sim.hpp"

namespace lumilink {

/// Everything needed to reproduce a run.
///
/// JSON layout:
///
///     { "params": {...}, "solver": {...}, "experiment": {...}, "manifest": {...} }
///
/// Every section and field is optional and falls back to its default. Unknown
/// keys are rejected. "manifest" carries provenance only and is ignored on
/// load, so a written manifest is itself a valid config.
struct RunConfig {
    SystemParams params = default_params();
    SolverSettings solver = default_settings();
    ExperimentConfig experiment;

    friend bool operator==(const RunConfig&, const RunConfig&) = default;
};

struct ManifestInfo {
    std::string tool_version;
    std::string timestamp;
    std::string command;
    std::string preset;
};

/// Fields present in the JSON override `base`; absent ones keep its values.
/// Throws ConfigError on syntax errors, type mismatches, unknown keys and
/// failed validation.
RunConfig parse_run_config(std::string_view json_text, const RunConfig& base = RunConfig{});
RunConfig load_run_config(const std::filesystem::path& path, const RunConfig& base = RunConfig{});

/// Pretty-printed JSON; doubles are written with round-trip precision.
std::string dump_run_config(const RunConfig& config);
std::string dump_manifest(const RunConfig& config, const ManifestInfo& info);

}  // namespace lumilink
