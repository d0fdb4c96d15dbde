#pragma once

#include <geolab/cli/config.hpp>
#include <geolab/cli/manifest.hpp>

#include <filesystem>
#include <functional>
#include <map>
#include <string>
#include <vector>

namespace geolab::cli {

class RunContext {
public:
    RunContext(ExperimentConfig config, std::filesystem::path dir);

    const ExperimentConfig& config() const { return config_; }
    const std::filesystem::path& dir() const { return dir_; }
    uint64_t seed() const { return config_.seed(); }

    /// Writes dir/name and records it as an artifact.
    void write(const std::string& name, const std::string& content);

    void check_abs(const std::string& name, double value, double expected, double tol);
    void check_le(const std::string& name, double value, double bound);
    void check_ge(const std::string& name, double value, double bound);
    void check_true(const std::string& name, bool ok);

    const std::vector<Artifact>& artifacts() const { return artifacts_; }
    const std::vector<CheckResult>& checks() const { return checks_; }

private:
    ExperimentConfig config_;
    std::filesystem::path dir_;
    std::vector<Artifact> artifacts_;
    std::vector<CheckResult> checks_;
};

struct CommandSpec {
    std::string name;
    std::string summary;
    std::vector<std::string> targets;              // accepted targets
    std::map<std::string, std::string> defaults;   // parameter keys with defaults, target included
    std::function<void(RunContext&)> run;
};

const std::vector<CommandSpec>& commands();
/// nullptr for unknown names.
const CommandSpec* find_command(const std::string& name);

/// checks.csv content: name,value,expected,tolerance,comparison,pass
std::string checks_csv(const std::vector<CheckResult>& checks);

} // namespace geolab::cli
