#include <geolab/cli/manifest.hpp>
#include <geolab/cli/report_index.hpp>
#include <geolab/common/csv.hpp>
#include <geolab/common/error.hpp>

#include <algorithm>

namespace geolab::cli {

std::vector<IndexRow> report_index(const std::filesystem::path& results_dir)
{
    std::vector<IndexRow> rows;
    if (!std::filesystem::exists(results_dir)) return rows;
    std::vector<std::filesystem::path> dirs;
    for (const auto& e : std::filesystem::recursive_directory_iterator(results_dir))
        if (e.is_regular_file() && e.path().filename() == kManifestName) dirs.push_back(e.path().parent_path());
    std::sort(dirs.begin(), dirs.end());
    for (const auto& d : dirs) {
        IndexRow row;
        row.run_dir = std::filesystem::relative(d, results_dir).generic_string();
        try {
            const RunManifest m = read_manifest(d);
            row.config_hash = m.config_hash;
            row.subcommand = m.subcommand;
            row.target = m.target;
            row.started = m.started;
            row.passes = m.passes();
            row.failures = m.failures();
            row.flag = "ok";
            for (const auto& p : verify_artifacts(d, m)) {
                if (p.rfind("missing", 0) == 0) {
                    row.flag = "missing_artifact";
                    break;
                }
                row.flag = "hash_mismatch";
            }
        } catch (const Error&) {
            row.flag = "corrupt";
        }
        rows.push_back(row);
    }
    std::stable_sort(rows.begin(), rows.end(), [](const IndexRow& a, const IndexRow& b) {
        return std::tie(a.started, a.config_hash) < std::tie(b.started, b.config_hash);
    });
    return rows;
}

std::string index_csv(const std::vector<IndexRow>& rows)
{
    CsvWriter csv({"run_dir", "config_hash", "subcommand", "target", "started", "passes", "failures", "flag"});
    for (const auto& r : rows)
        csv.row({r.run_dir, r.config_hash, r.subcommand, r.target, r.started, std::to_string(r.passes),
                 std::to_string(r.failures), r.flag});
    return csv.str();
}

} // namespace geolab::cli
