#include <geolab/common/csv.hpp>
#include <geolab/flow/trajectory_io.hpp>
#include <geolab/surface/mesh_io.hpp>

#include <fmt/core.h>

namespace geolab::flow {

namespace {

// Interleave recorded states with rejected attempts in time order.
template <class Traj, class Extra>
std::string write_rows(const Traj& traj, std::vector<std::string> header, Extra extra)
{
    CsvWriter csv(std::move(header));
    size_t rec = 0;
    auto emit_state = [&](size_t i, bool accepted, double t) {
        std::vector<std::string> row = {format_double(t), format_double(traj.measure[i]),
                                        format_double(traj.max_speed[i]), accepted ? "1" : "0"};
        extra(i, row);
        csv.row(row);
    };
    for (const auto& step : traj.step_log) {
        if (step.accepted) continue;
        // Recorded states strictly before this attempt come first.
        while (rec < traj.size() && traj.times[rec] <= step.t) emit_state(rec, true, traj.times[rec]), ++rec;
        emit_state(rec == 0 ? 0 : rec - 1, false, step.t + step.dt);
    }
    while (rec < traj.size()) emit_state(rec, true, traj.times[rec]), ++rec;
    return csv.str();
}

} // namespace

std::string trajectory_csv(const MeshTrajectory& traj)
{
    return write_rows(traj, {"t", "area_or_volume", "max_speed", "accepted"}, [](size_t, auto&) {});
}

std::string trajectory_csv(const ParamTrajectory& traj)
{
    std::vector<std::string> header = {"t", "area_or_volume", "max_speed", "accepted"};
    const auto P = traj.states.empty() ? 0 : traj.states.front().size();
    for (Eigen::Index p = 0; p < P; ++p) header.push_back(fmt::format("theta_{}", p));
    return write_rows(traj, header, [&](size_t i, std::vector<std::string>& row) {
        for (Eigen::Index p = 0; p < P; ++p) row.push_back(format_double(traj.states[i][p]));
    });
}

std::vector<std::filesystem::path> write_snapshots(const MeshTrajectory& traj, const std::filesystem::path& dir,
                                                   const std::string& stem, int every)
{
    std::vector<std::filesystem::path> out;
    if (every <= 0) return out;
    std::filesystem::create_directories(dir);
    for (size_t i = 0; i < traj.size(); i += static_cast<size_t>(every)) {
        const auto path = dir / fmt::format("{}_{:05d}.off", stem, i);
        surface::write_mesh(traj.mesh_at(i), path);
        out.push_back(path);
    }
    return out;
}

} // namespace geolab::flow
