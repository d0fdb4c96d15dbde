#include <doctest.h>

#include <geolab/cli/commands.hpp>
#include <geolab/cli/config.hpp>
#include <geolab/cli/manifest.hpp>
#include <geolab/cli/report_index.hpp>
#include <geolab/cli/runner.hpp>
#include <geolab/cli/sha256.hpp>
#include <geolab/cli/svg.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

using namespace geolab::cli;
namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string& name)
{
    const fs::path p = fs::temp_directory_path() / ("geolab_cli_" + name);
    fs::remove_all(p);
    fs::create_directories(p);
    return p;
}

std::string slurp(const fs::path& p)
{
    std::ifstream f(p, std::ios::binary);
    std::stringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

int call(std::vector<std::string> args)
{
    args.insert(args.begin(), "geolab");
    std::vector<char*> argv;
    for (auto& a : args) argv.push_back(a.data());
    return cli_main(static_cast<int>(argv.size()), argv.data());
}

ExperimentConfig config_for(const std::string& sub, const std::string& target, const fs::path& out)
{
    ExperimentConfig c;
    c.set("subcommand", sub);
    c.set("target", target);
    c.set("out", out.string());
    return c;
}

} // namespace

TEST_CASE("SHA-256 digests")
{
    CHECK(sha256_hex("") == "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
    CHECK(sha256_hex("abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST_CASE("config round trip and validation")
{
    auto c = parse_config("# run\nsubcommand = mcf\n target=sphere \ndt = 1e-4\nradii = 0.1, 0.2,0.4\n\n");
    CHECK(c.get("target") == "sphere");
    CHECK(c.number("dt") == 1e-4);
    CHECK(c.list("radii") == std::vector<double>{0.1, 0.2, 0.4});
    CHECK(parse_config(serialize(c)) == c);
    CHECK(serialize(parse_config(serialize(c))) == serialize(c));

    CHECK_THROWS_AS(parse_config("dt = 1\ndt = 2\n"), UsageError);
    CHECK_THROWS_AS(parse_config("no equals sign\n"), UsageError);
    CHECK_THROWS_AS(parse_config("Bad Key = 1\n"), UsageError);
    CHECK_THROWS_AS(c.number("target"), UsageError);
    CHECK_THROWS_AS(c.get("missing"), UsageError);

    // Unknown keys, targets and subcommands are rejected during completion.
    CHECK_THROWS_AS(complete_config(c), UsageError);
    c.values.erase("radii");
    auto bad = c;
    bad.set("frobnication_level", "3");
    CHECK_THROWS_AS(complete_config(bad), UsageError);
    auto wrong_target = c;
    wrong_target.set("target", "torus");
    CHECK_THROWS_AS(complete_config(wrong_target), UsageError);
    auto wrong_sub = c;
    wrong_sub.set("subcommand", "frobnicate");
    CHECK_THROWS_AS(complete_config(wrong_sub), UsageError);
    auto bad_seed = c;
    bad_seed.set("seed", "-4");
    CHECK_THROWS_AS(complete_config(bad_seed), UsageError);

    const auto full = complete_config(c);
    CHECK(full.get("level") == "3");
    CHECK(full.get("out") == "results/mcf-sphere");
    auto moved = full;
    moved.set("out", "elsewhere");
    CHECK(config_hash(moved) == config_hash(full));
    moved.set("seed", "2");
    CHECK(config_hash(moved) != config_hash(full));
}

TEST_CASE("manifest serialization")
{
    RunManifest m;
    m.config_hash = "abc";
    m.tool_version = kToolVersion;
    m.subcommand = "ricci";
    m.target = "s4";
    m.seed = 18446744073709551615ull;
    m.started = "2026-01-01T00:00:00.000Z";
    m.finished = "2026-01-01T00:00:01.000Z";
    m.artifacts = {{"a.csv", "00"}, {"b.svg", "11"}};
    m.checks = {{"x", 0.1, 0.3, 1e-9, "abs", false}, {"y", 1, 2, 0, "le", true}};
    const auto back = parse_manifest(serialize(m));
    CHECK(serialize(back) == serialize(m));
    CHECK(back.seed == m.seed);
    CHECK(back.passes() == 1);
    CHECK(back.failures() == 1);
    CHECK_THROWS_AS(parse_manifest("config_hash = x\n"), geolab::Error);
}

TEST_CASE("unknown subcommand is a usage error")
{
    CHECK(call({"frobnicate"}) == 2);
    CHECK(call({}) == 2);
    CHECK(call({"mcf", "--target", "torus"}) == 2);
    CHECK(call({"mcf", "--set", "frob=1"}) == 2);
    CHECK(call({"mcf", "--config", "/nonexistent/config.txt"}) == 2);
}

TEST_CASE("einstein-check on S4 passes with lambda 3")
{
    const auto dir = scratch("einstein");
    const auto cfg = dir / "s4.txt";
    std::ofstream(cfg) << "target = s4\nout = " << (dir / "run").string() << "\n";
    CHECK(call({"einstein-check", "--config", cfg.string()}) == 0);
    const auto m = read_manifest(dir / "run");
    CHECK(m.failures() == 0);
    CHECK(m.passes() > 0);
    bool saw_lambda = false;
    for (const auto& c : m.checks)
        if (c.name == "lambda_hat") {
            saw_lambda = true;
            CHECK(c.value == doctest::Approx(3.0).epsilon(1e-4));
        }
    CHECK(saw_lambda);
    CHECK(verify_artifacts(dir / "run", m).empty());
    // The chart alias selects the target from the command line.
    CHECK(call({"einstein-check", "--chart", "s4", "--out", (dir / "alias").string()}) == 0);
    CHECK(read_manifest(dir / "alias").config_hash == m.config_hash);
}

TEST_CASE("check failures exit with 1")
{
    const auto dir = scratch("fail");
    // A 6 x 8 disk mesh is far too coarse for the 1% eigenvalue check.
    CHECK(call({"spectrum", "--set", "nu=6", "--set", "nv=8", "--out", dir.string()}) == 1);
    CHECK(read_manifest(dir).failures() > 0);
}

TEST_CASE("reruns are byte-identical")
{
    const auto dir = scratch("rerun");
    auto c = config_for("verify-minimal", "all", dir / "a");
    c.set("seed", "42");
    c.set("samples", "200");
    const auto a = run(c);
    c.set("out", (dir / "b").string());
    const auto b = run(c);
    CHECK(a.config_hash == b.config_hash);
    REQUIRE(a.artifacts.size() == b.artifacts.size());
    for (size_t i = 0; i < a.artifacts.size(); ++i) {
        CHECK(a.artifacts[i].path == b.artifacts[i].path);
        CHECK(a.artifacts[i].sha256 == b.artifacts[i].sha256);
        CHECK(slurp(dir / "a" / a.artifacts[i].path) == slurp(dir / "b" / b.artifacts[i].path));
    }
    c.set("seed", "43");
    c.set("out", (dir / "c").string());
    const auto other = run(c);
    CHECK(slurp(dir / "c" / "minimality.csv") != slurp(dir / "a" / "minimality.csv"));
    CHECK(other.config_hash != a.config_hash);
}

TEST_CASE("failed runs leave no manifest")
{
    const auto dir = scratch("partial");
    auto c = config_for("monotonicity", "plane", dir);
    CHECK(run(c).failures() == 0);
    REQUIRE(fs::exists(dir / kManifestName));
    c.set("radii", "0.5,0.2");
    CHECK_THROWS_AS(run(c), UsageError);
    CHECK_FALSE(fs::exists(dir / kManifestName));
}

TEST_CASE("report index")
{
    const auto dir = scratch("index");
    CHECK(report_index(dir).empty());
    CHECK(index_csv(report_index(dir)) == "run_dir,config_hash,subcommand,target,started,passes,failures,flag\n");
    CHECK(report_index(dir / "does_not_exist").empty());

    run(config_for("ricci", "flat_torus", dir / "first"));
    std::this_thread::sleep_for(std::chrono::milliseconds(5));
    run(config_for("ricci", "s4", dir / "second"));
    auto rows = report_index(dir);
    REQUIRE(rows.size() == 2);
    CHECK(rows[0].run_dir == "first");
    CHECK(rows[1].run_dir == "second");
    CHECK(rows[0].started < rows[1].started);
    for (const auto& r : rows) {
        CHECK(r.flag == "ok");
        CHECK(r.failures == 0);
        CHECK(r.passes > 0);
    }

    // Tampered artifact.
    std::ofstream(dir / "second" / "trajectory.csv", std::ios::app) << "tampered\n";
    rows = report_index(dir);
    CHECK(rows[0].flag == "ok");
    CHECK(rows[1].flag == "hash_mismatch");

    // Missing artifact and corrupt manifest.
    fs::remove(dir / "first" / "trajectory.svg");
    fs::create_directories(dir / "broken");
    std::ofstream(dir / "broken" / kManifestName) << "garbage\n";
    rows = report_index(dir);
    REQUIRE(rows.size() == 3);
    int corrupt = 0, missing = 0;
    for (const auto& r : rows) {
        corrupt += r.flag == "corrupt";
        missing += r.flag == "missing_artifact";
    }
    CHECK(corrupt == 1);
    CHECK(missing == 1);

    const auto report_dir = dir / "report_out";
    CHECK(call({"report", "--set", "results=" + (dir / "nothing").string(), "--out", report_dir.string()}) == 0);
    CHECK(slurp(report_dir / "index.csv") == "run_dir,config_hash,subcommand,target,started,passes,failures,flag\n");
}

TEST_CASE("svg line plot")
{
    const auto svg = line_plot("t <title>", "x", "y", {{"a", {0, 1, 2}, {1, 4, 9}}, {"b", {0, 1}, {0, 0}}});
    CHECK(svg.rfind("<svg", 0) == 0);
    CHECK(svg.find("&lt;title&gt;") != std::string::npos);
    CHECK(svg.find("<polyline") != std::string::npos);
    CHECK(svg.find("</svg>") != std::string::npos);
}
