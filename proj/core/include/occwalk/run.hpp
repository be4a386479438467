#pragma once

#include "occwalk/analysis.hpp"
#include "occwalk/error.hpp"
#include "occwalk/generators.hpp"
#include "occwalk/io.hpp"

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace occwalk {

/// Version string recorded in every provenance record.
const char* version() noexcept;

/// Environment variable naming the default output directory.
inline constexpr const char* kOutputDirEnv = "OCCWALK_OUTPUT_DIR";

/// Output directory from the flag, else $OCCWALK_OUTPUT_DIR, else "occwalk-out".
std::filesystem::path resolve_output_dir(const std::optional<std::filesystem::path>& flag);

struct RunConfig {
    std::vector<std::filesystem::path> inputs;
    InputKind kind = InputKind::EdgeList;
    AggregateMode flatten_mode = AggregateMode::Binary;
    bool weighted = false;
    bool drop_isolated = false;
    bool per_component = false;
    std::size_t top_k = 20;
    InitialState psi0 = InitialState::uniform();
    ClassicalMethod classical = ClassicalMethod::ClosedForm;
    QuantumMethod quantum = QuantumMethod::Spectral;
    std::optional<double> euler_dt;  ///< 0.1 / max H_ii when empty
    double euler_horizon = 1000.0;
    double euler_tolerance = 1e-10;
    IntegrationConfig leapfrog = default_leapfrog_config();
    std::uint64_t seed = 0;  ///< echoed for provenance
    std::filesystem::path output_dir = "occwalk-out";

    /// Throws InvalidConfig.
    void validate() const;
    /// Config echo with all defaults resolved, as JSON text.
    std::string to_json() const;
};

struct RunResult {
    int exit_code = 0;
    std::vector<std::filesystem::path> files;
    std::optional<ErrorCode> error;
    std::string message;
};

/// Ingest, optional flatten, analysis and artifact writing for every input.
/// Inputs are processed concurrently. Failures produce `error.json` in the
/// output directory and a nonzero exit code instead of an exception.
RunResult run_analysis(const RunConfig& cfg);

struct GenerateConfig {
    std::vector<BAConfig> layers;  ///< one entry: single-layer edge list
    SyntheticMultilayerConfig::Overlap overlap;
    std::uint64_t seed = 0;
    std::filesystem::path output;  ///< CSV path; the config echo goes to <output>.config.json
};

/// Writes the generated CSV and its JSON config echo. Returns the written paths.
std::vector<std::filesystem::path> run_generate(const GenerateConfig& cfg);

/// Flattens a multilayer CSV into an edge-list CSV.
void run_flatten(const std::filesystem::path& input, AggregateMode mode, const std::filesystem::path& output);

/// Machine-readable error record.
std::string error_json(ErrorCode code, std::string_view message, std::string_view context);

}  // namespace occwalk
