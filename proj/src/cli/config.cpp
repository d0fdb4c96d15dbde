#include <geolab/cli/config.hpp>

#include <fmt/core.h>

#include <boost/algorithm/string.hpp>

#include <fstream>
#include <regex>
#include <sstream>

namespace geolab::cli {

namespace {

const std::regex kKey("[a-z][a-z0-9_.-]*");

double parse_number(const std::string& key, const std::string& s)
{
    size_t used = 0;
    double x = 0.0;
    try {
        x = std::stod(s, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used == 0 || used != s.size()) throw UsageError(fmt::format("'{}' expects a number, got '{}'", key, s));
    return x;
}

} // namespace

const std::string& ExperimentConfig::get(const std::string& key) const
{
    const auto it = values.find(key);
    if (it == values.end()) throw UsageError(fmt::format("missing config key '{}'", key));
    return it->second;
}

double ExperimentConfig::number(const std::string& key) const { return parse_number(key, get(key)); }

long ExperimentConfig::integer(const std::string& key) const
{
    const double x = number(key);
    if (x != static_cast<double>(static_cast<long>(x))) throw UsageError(fmt::format("'{}' expects an integer", key));
    return static_cast<long>(x);
}

bool ExperimentConfig::flag(const std::string& key) const
{
    const std::string& v = get(key);
    if (v == "true" || v == "1") return true;
    if (v == "false" || v == "0") return false;
    throw UsageError(fmt::format("'{}' expects true or false, got '{}'", key, v));
}

std::vector<double> ExperimentConfig::list(const std::string& key) const
{
    std::vector<std::string> parts;
    boost::split(parts, get(key), boost::is_any_of(","));
    std::vector<double> out;
    for (auto& p : parts) {
        boost::trim(p);
        out.push_back(parse_number(key, p));
    }
    return out;
}

void ExperimentConfig::set(const std::string& key, const std::string& value)
{
    if (!std::regex_match(key, kKey)) throw UsageError(fmt::format("invalid config key '{}'", key));
    if (value.find('\n') != std::string::npos) throw UsageError("config values are single-line");
    values[key] = boost::trim_copy(value);
}

uint64_t ExperimentConfig::seed() const
{
    const std::string& s = get("seed");
    size_t used = 0;
    unsigned long long x = 0;
    try {
        x = std::stoull(s, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used == 0 || used != s.size() || s.front() == '-') throw UsageError(fmt::format("seed must be an unsigned integer, got '{}'", s));
    return x;
}

ExperimentConfig parse_config(const std::string& text)
{
    ExperimentConfig c;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        boost::trim(line);
        if (line.empty() || line.front() == '#') continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) throw UsageError(fmt::format("config line {}: expected key = value", lineno));
        const std::string key = boost::trim_copy(line.substr(0, eq));
        if (c.has(key)) throw UsageError(fmt::format("config line {}: duplicate key '{}'", lineno, key));
        c.set(key, line.substr(eq + 1));
    }
    return c;
}

std::string serialize(const ExperimentConfig& config)
{
    std::string out;
    for (const auto& [k, v] : config.values) out += k + " = " + v + "\n";
    return out;
}

ExperimentConfig load_config(const std::filesystem::path& path)
{
    std::ifstream f(path);
    if (!f) throw UsageError(fmt::format("cannot read config '{}'", path.string()));
    std::stringstream ss;
    ss << f.rdbuf();
    return parse_config(ss.str());
}

} // namespace geolab::cli
