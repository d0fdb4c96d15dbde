#pragma once

#include <geolab/common/error.hpp>

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

namespace geolab::cli {

/// Bad command line, config document or key; maps to exit code 2.
class UsageError : public Error {
public:
    using Error::Error;
};

/// Flat key = value document. Reserved keys: subcommand, target, out, seed.
struct ExperimentConfig {
    std::map<std::string, std::string> values;

    bool has(const std::string& key) const { return values.count(key) > 0; }
    const std::string& get(const std::string& key) const;
    double number(const std::string& key) const;
    long integer(const std::string& key) const;
    bool flag(const std::string& key) const;
    std::vector<double> list(const std::string& key) const;
    void set(const std::string& key, const std::string& value);

    std::string subcommand() const { return get("subcommand"); }
    std::string target() const { return get("target"); }
    uint64_t seed() const;

    bool operator==(const ExperimentConfig&) const = default;
};

/// Lines "key = value"; '#' starts a comment line. Duplicate or malformed keys throw UsageError.
ExperimentConfig parse_config(const std::string& text);
/// Sorted "key = value" lines; parse_config(serialize(c)) == c.
std::string serialize(const ExperimentConfig& config);
ExperimentConfig load_config(const std::filesystem::path& path);

} // namespace geolab::cli
