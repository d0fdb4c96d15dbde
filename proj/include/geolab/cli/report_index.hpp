#pragma once

#include <filesystem>
#include <string>
#include <vector>

namespace geolab::cli {

struct IndexRow {
    std::string run_dir; // relative to the results directory
    std::string config_hash;
    std::string subcommand;
    std::string target;
    std::string started;
    int passes = 0;
    int failures = 0;
    std::string flag; // ok, hash_mismatch, missing_artifact, corrupt
};

/// One row per manifest found below results_dir, ordered by start time then hash.
std::vector<IndexRow> report_index(const std::filesystem::path& results_dir);

/// run_dir,config_hash,subcommand,target,started,passes,failures,flag
std::string index_csv(const std::vector<IndexRow>& rows);

} // namespace geolab::cli
