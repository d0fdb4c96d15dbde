#pragma once

#include <filesystem>
#include <string>
#include <vector>

namespace geolab::cli {

struct CheckResult {
    std::string name;
    double value = 0.0;
    double expected = 0.0;
    double tolerance = 0.0;
    std::string comparison; // "abs" |value - expected| <= tolerance, "le" value <= expected, "ge" value >= expected
    bool pass = false;
};

struct Artifact {
    std::string path; // relative to the run directory
    std::string sha256;
};

struct RunManifest {
    std::string config_hash;
    std::string tool_version;
    std::string subcommand;
    std::string target;
    unsigned long long seed = 0;
    std::string started;
    std::string finished;
    std::vector<Artifact> artifacts;
    std::vector<CheckResult> checks;

    int passes() const;
    int failures() const;
};

inline constexpr const char* kManifestName = "manifest.txt";

std::string serialize(const RunManifest& m);
/// Throws Error on malformed documents.
RunManifest parse_manifest(const std::string& text);

/// Writes dir/manifest.txt through a temporary file and a rename.
void write_manifest(const std::filesystem::path& dir, const RunManifest& m);
RunManifest read_manifest(const std::filesystem::path& dir);

/// Missing or altered artifacts, one message each.
std::vector<std::string> verify_artifacts(const std::filesystem::path& dir, const RunManifest& m);

} // namespace geolab::cli
