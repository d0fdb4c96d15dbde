#include <geolab/cli/commands.hpp>
#include <geolab/cli/runner.hpp>
#include <geolab/cli/sha256.hpp>

#include <CLI11.hpp>
#include <fmt/chrono.h>
#include <fmt/core.h>

#include <algorithm>
#include <chrono>
#include <iostream>

namespace geolab::cli {

namespace {

const char* const kReserved[] = {"subcommand", "target", "out", "seed"};

std::string utc_now()
{
    const auto now = std::chrono::system_clock::now();
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(now.time_since_epoch()).count() % 1000;
    return fmt::format("{:%Y-%m-%dT%H:%M:%S}.{:03d}Z", fmt::gmtime(std::chrono::system_clock::to_time_t(now)), ms);
}

std::string join(const std::vector<std::string>& xs)
{
    std::string out;
    for (const auto& x : xs) out += (out.empty() ? "" : ", ") + x;
    return out;
}

} // namespace

ExperimentConfig complete_config(const ExperimentConfig& config)
{
    if (!config.has("subcommand")) throw UsageError("no subcommand given");
    const CommandSpec* cmd = find_command(config.subcommand());
    if (!cmd) throw UsageError(fmt::format("unknown subcommand '{}'", config.subcommand()));

    ExperimentConfig out = config;
    for (const auto& [key, value] : config.values) {
        const bool reserved = std::find(std::begin(kReserved), std::end(kReserved), key) != std::end(kReserved);
        if (!reserved && !cmd->defaults.count(key))
            throw UsageError(fmt::format("unknown key '{}' for {}", key, cmd->name));
    }
    for (const auto& [key, value] : cmd->defaults)
        if (!out.has(key)) out.set(key, value);
    if (!out.has("seed")) out.set("seed", "1");
    out.seed();

    const auto& targets = cmd->targets;
    if (std::find(targets.begin(), targets.end(), out.target()) == targets.end())
        throw UsageError(fmt::format("unknown target '{}' for {} (expected one of {})", out.target(), cmd->name, join(targets)));
    if (!out.has("out")) out.set("out", fmt::format("results/{}-{}", cmd->name, out.target()));
    return out;
}

namespace {

ExperimentConfig without_out(ExperimentConfig c)
{
    c.values.erase("out");
    return c;
}

} // namespace

std::string config_hash(const ExperimentConfig& complete) { return sha256_hex(serialize(without_out(complete))); }

RunManifest run(const ExperimentConfig& config)
{
    const ExperimentConfig complete = complete_config(config);
    const CommandSpec& cmd = *find_command(complete.subcommand());
    const std::filesystem::path dir = complete.get("out");
    std::filesystem::create_directories(dir);
    std::filesystem::remove(dir / kManifestName);

    RunManifest m;
    m.config_hash = config_hash(complete);
    m.tool_version = kToolVersion;
    m.subcommand = cmd.name;
    m.target = complete.target();
    m.seed = complete.seed();
    m.started = utc_now();

    RunContext ctx(complete, dir);
    ctx.write("config.txt", serialize(without_out(complete)));
    cmd.run(ctx);
    ctx.write("checks.csv", checks_csv(ctx.checks()));

    m.finished = utc_now();
    m.artifacts = ctx.artifacts();
    m.checks = ctx.checks();
    write_manifest(dir, m);
    return m;
}

int cli_main(int argc, char** argv)
{
    CLI::App app{"Numerical geometry laboratory"};
    app.require_subcommand(1);
    std::string config_path, out, seed, target;
    std::vector<std::string> sets;
    for (const auto& cmd : commands()) {
        auto* sub = app.add_subcommand(cmd.name, cmd.summary);
        sub->add_option("--config", config_path, "key = value config document");
        sub->add_option("--out", out, "output directory");
        sub->add_option("--seed", seed, "unsigned 64-bit seed");
        sub->add_option("--target,--chart,--patch", target, "target name: " + join(cmd.targets));
        sub->add_option("--set", sets, "key=value override")->take_all();
    }

    if (argc > 1 && argv[1][0] != '-' && !find_command(argv[1])) {
        std::cerr << "usage error: unknown subcommand '" << argv[1] << "'\n";
        return 2;
    }
    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        const std::string name = app.get_subcommands().front()->get_name();
        ExperimentConfig config = config_path.empty() ? ExperimentConfig{} : load_config(config_path);
        if (config.has("subcommand") && config.subcommand() != name)
            throw UsageError(fmt::format("config is for '{}', not '{}'", config.subcommand(), name));
        config.set("subcommand", name);
        for (const auto& s : sets) {
            const auto eq = s.find('=');
            if (eq == std::string::npos) throw UsageError(fmt::format("--set expects key=value, got '{}'", s));
            config.set(s.substr(0, eq), s.substr(eq + 1));
        }
        if (!target.empty()) config.set("target", target);
        if (!out.empty()) config.set("out", out);
        if (!seed.empty()) config.set("seed", seed);

        const RunManifest m = run(config);
        for (const auto& c : m.checks) {
            const std::string rule = c.comparison == "le"   ? fmt::format("<= {}", c.expected)
                                     : c.comparison == "ge" ? fmt::format(">= {}", c.expected)
                                                            : fmt::format("= {} +- {}", c.expected, c.tolerance);
            fmt::print("{} {} {} (want {})\n", c.pass ? "PASS" : "FAIL", c.name, c.value, rule);
        }
        fmt::print("{}: {} passed, {} failed, manifest in {}\n", m.subcommand, m.passes(), m.failures(),
                   complete_config(config).get("out"));
        return m.failures() == 0 ? 0 : 1;
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}

} // namespace geolab::cli
