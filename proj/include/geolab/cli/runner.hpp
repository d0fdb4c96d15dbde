#pragma once

#include <geolab/cli/config.hpp>
#include <geolab/cli/manifest.hpp>

#include <filesystem>

namespace geolab::cli {

inline constexpr const char* kToolVersion = "1.0.0";

/// Fills defaults and rejects unknown subcommands, targets and keys (UsageError).
ExperimentConfig complete_config(const ExperimentConfig& config);

/// SHA-256 of the completed config without the output directory.
std::string config_hash(const ExperimentConfig& complete);

/// Runs the subcommand into config "out". Any stale manifest is removed
/// first; the new one is written after every artifact.
RunManifest run(const ExperimentConfig& config);

/// Command-line entry point; returns the process exit code.
int cli_main(int argc, char** argv);

} // namespace geolab::cli
