#include <geolab/cli/manifest.hpp>
#include <geolab/cli/sha256.hpp>
#include <geolab/common/csv.hpp>
#include <geolab/common/error.hpp>

#include <boost/algorithm/string.hpp>
#include <fmt/core.h>

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

namespace geolab::cli {

int RunManifest::passes() const
{
    return static_cast<int>(std::count_if(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; }));
}

int RunManifest::failures() const { return static_cast<int>(checks.size()) - passes(); }

std::string serialize(const RunManifest& m)
{
    std::string out;
    auto kv = [&](const std::string& k, const std::string& v) { out += k + " = " + v + "\n"; };
    kv("config_hash", m.config_hash);
    kv("tool_version", m.tool_version);
    kv("subcommand", m.subcommand);
    kv("target", m.target);
    kv("seed", std::to_string(m.seed));
    kv("started", m.started);
    kv("finished", m.finished);
    kv("artifact_count", std::to_string(m.artifacts.size()));
    for (size_t i = 0; i < m.artifacts.size(); ++i) {
        kv(fmt::format("artifact.{}.path", i), m.artifacts[i].path);
        kv(fmt::format("artifact.{}.sha256", i), m.artifacts[i].sha256);
    }
    kv("check_count", std::to_string(m.checks.size()));
    for (size_t i = 0; i < m.checks.size(); ++i) {
        const auto& c = m.checks[i];
        kv(fmt::format("check.{}.name", i), c.name);
        kv(fmt::format("check.{}.value", i), format_double(c.value));
        kv(fmt::format("check.{}.expected", i), format_double(c.expected));
        kv(fmt::format("check.{}.tolerance", i), format_double(c.tolerance));
        kv(fmt::format("check.{}.comparison", i), c.comparison);
        kv(fmt::format("check.{}.pass", i), c.pass ? "true" : "false");
    }
    kv("summary.pass", std::to_string(m.passes()));
    kv("summary.fail", std::to_string(m.failures()));
    return out;
}

RunManifest parse_manifest(const std::string& text)
{
    std::map<std::string, std::string> kv;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (boost::trim_copy(line).empty()) continue;
        const auto eq = line.find(" = ");
        if (eq == std::string::npos) throw Error(fmt::format("malformed manifest line '{}'", line));
        kv[line.substr(0, eq)] = line.substr(eq + 3);
    }
    auto get = [&](const std::string& k) -> const std::string& {
        const auto it = kv.find(k);
        if (it == kv.end()) throw Error(fmt::format("manifest lacks '{}'", k));
        return it->second;
    };
    auto count = [&](const std::string& k) {
        try {
            return std::stoul(get(k));
        } catch (const std::logic_error&) {
            throw Error(fmt::format("manifest field '{}' is not a count", k));
        }
    };
    RunManifest m;
    m.config_hash = get("config_hash");
    m.tool_version = get("tool_version");
    m.subcommand = get("subcommand");
    m.target = get("target");
    m.seed = count("seed");
    m.started = get("started");
    m.finished = get("finished");
    for (size_t i = 0, n = count("artifact_count"); i < n; ++i)
        m.artifacts.push_back({get(fmt::format("artifact.{}.path", i)), get(fmt::format("artifact.{}.sha256", i))});
    for (size_t i = 0, n = count("check_count"); i < n; ++i) {
        CheckResult c;
        c.name = get(fmt::format("check.{}.name", i));
        try {
            c.value = std::stod(get(fmt::format("check.{}.value", i)));
            c.expected = std::stod(get(fmt::format("check.{}.expected", i)));
            c.tolerance = std::stod(get(fmt::format("check.{}.tolerance", i)));
        } catch (const std::logic_error&) {
            throw Error(fmt::format("manifest check {} has a non-numeric field", i));
        }
        c.comparison = get(fmt::format("check.{}.comparison", i));
        c.pass = get(fmt::format("check.{}.pass", i)) == "true";
        m.checks.push_back(c);
    }
    return m;
}

void write_manifest(const std::filesystem::path& dir, const RunManifest& m)
{
    const auto tmp = dir / (std::string(kManifestName) + ".tmp");
    {
        std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
        if (!f) throw Error(fmt::format("cannot write '{}'", tmp.string()));
        f << serialize(m);
        if (!f.flush()) throw Error(fmt::format("cannot write '{}'", tmp.string()));
    }
    std::filesystem::rename(tmp, dir / kManifestName);
}

RunManifest read_manifest(const std::filesystem::path& dir)
{
    std::ifstream f(dir / kManifestName, std::ios::binary);
    if (!f) throw Error(fmt::format("no manifest in '{}'", dir.string()));
    std::stringstream ss;
    ss << f.rdbuf();
    return parse_manifest(ss.str());
}

std::vector<std::string> verify_artifacts(const std::filesystem::path& dir, const RunManifest& m)
{
    std::vector<std::string> problems;
    for (const auto& a : m.artifacts) {
        const auto p = dir / a.path;
        if (!std::filesystem::exists(p))
            problems.push_back(fmt::format("missing {}", a.path));
        else if (sha256_file(p) != a.sha256)
            problems.push_back(fmt::format("hash mismatch {}", a.path));
    }
    return problems;
}

} // namespace geolab::cli
