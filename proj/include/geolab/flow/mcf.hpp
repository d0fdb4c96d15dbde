#pragma once

#include <geolab/flow/trajectory.hpp>
#include <geolab/surface/mesh.hpp>

#include <memory>
#include <optional>

namespace geolab::flow {

using surface::TriangleMesh;
using surface::Vec3;

enum class Scheme { Explicit, SemiImplicit };

/// 0.25 * (shortest edge)^2, the explicit stability bound.
double cfl_bound(const TriangleMesh& mesh);

struct StepResult {
    TriangleMesh mesh;
    double max_speed = 0.0; // max |H| over moved vertices
    bool cfl_warning = false;
};

/// One step of x_t = -H nu with the cotangent Laplacian and mixed areas.
/// Boundary vertices stay fixed. Explicit moves by -H nu dt; semi-implicit
/// solves (A + dt/2 L) x' = A x with A the mixed-area diagonal.
/// Throws StepRejected when a triangle degenerates or flips.
StepResult mcf_step(const TriangleMesh& mesh, double dt, Scheme scheme = Scheme::Explicit);

struct StopCriteria {
    double area_fraction = 1e-2; // stop once area < fraction * initial area
    long max_steps = 10'000'000;
    bool adaptive = false;       // shrink dt to cfl_safety * cfl_bound, halve on rejection
    double cfl_safety = 0.9;
    double min_dt_fraction = 1e-6; // adaptive steps below this * dt end the run as degenerate
    int record_every = 1;
};

struct MeshTrajectory : FlowTrajectory<std::vector<Vec3>> {
    std::shared_ptr<const TriangleMesh> topology;
    std::optional<double> extinction_time; // extrapolated zero of the area series

    TriangleMesh mesh_at(size_t i) const;
};

/// Runs the flow to t_end or until a stop criterion fires. A rejected step
/// ends a fixed-step run with StopReason::Degenerate and the last valid state.
MeshTrajectory mcf_run(const TriangleMesh& mesh, double dt, double t_end, Scheme scheme = Scheme::Explicit,
                       const StopCriteria& stop = {});

/// Mean distance of the vertices from their centroid.
double mean_radius(const std::vector<Vec3>& points);

} // namespace geolab::flow
