#pragma once

#include <geolab/flow/mcf.hpp>
#include <geolab/flow/ricci.hpp>

#include <filesystem>
#include <string>

namespace geolab::flow {

/// Columns t, area_or_volume, max_speed, accepted. Rejected attempts appear
/// as rows with accepted = 0 carrying the unchanged state.
std::string trajectory_csv(const MeshTrajectory& traj);
/// Same columns followed by theta_0, theta_1, ...
std::string trajectory_csv(const ParamTrajectory& traj);

/// Writes OFF snapshots of every k-th recorded state as <stem>_<index>.off.
std::vector<std::filesystem::path> write_snapshots(const MeshTrajectory& traj, const std::filesystem::path& dir,
                                                   const std::string& stem, int every);

} // namespace geolab::flow
