#include <geolab/common/error.hpp>
#include <geolab/flow/mcf.hpp>
#include <geolab/surface/discrete_curvature.hpp>

#include <Eigen/SparseLU>
#include <fmt/core.h>

#include <algorithm>
#include <cmath>

namespace geolab::flow {

using surface::SparseMatrix;

std::string to_string(StopReason r)
{
    switch (r) {
    case StopReason::EndTime: return "end_time";
    case StopReason::AreaCollapse: return "area_collapse";
    case StopReason::Degenerate: return "degenerate";
    case StopReason::MaxSteps: return "max_steps";
    }
    return "unknown";
}

double cfl_bound(const TriangleMesh& mesh)
{
    double hmin = std::numeric_limits<double>::infinity();
    for (const auto& [a, b] : mesh.edges())
        hmin = std::min(hmin, (mesh.vertices()[static_cast<size_t>(a)] - mesh.vertices()[static_cast<size_t>(b)]).norm());
    return 0.25 * hmin * hmin;
}

namespace {

Eigen::MatrixXd positions(const TriangleMesh& mesh)
{
    Eigen::MatrixXd X(static_cast<Eigen::Index>(mesh.num_vertices()), 3);
    for (size_t i = 0; i < mesh.num_vertices(); ++i) X.row(static_cast<Eigen::Index>(i)) = mesh.vertices()[i].transpose();
    return X;
}

TriangleMesh checked_move(const TriangleMesh& mesh, const Eigen::MatrixXd& X)
{
    std::vector<Vec3> moved(mesh.num_vertices());
    for (size_t i = 0; i < moved.size(); ++i) {
        moved[i] = X.row(static_cast<Eigen::Index>(i)).transpose();
        if (!moved[i].allFinite()) throw StepRejected("non-finite vertex position");
    }
    try {
        TriangleMesh next = mesh.with_vertices(std::move(moved));
        for (size_t t = 0; t < mesh.num_triangles(); ++t)
            if (next.triangle_normal(t).dot(mesh.triangle_normal(t)) <= 0.0)
                throw StepRejected(fmt::format("triangle {} flipped", t));
        return next;
    } catch (const DegenerateTriangle& e) {
        throw StepRejected(e.what());
    }
}

} // namespace

StepResult mcf_step(const TriangleMesh& mesh, double dt, Scheme scheme)
{
    if (!(dt > 0.0)) throw Error("time step must be positive");
    const SparseMatrix L = surface::cotan_stiffness(mesh);
    const std::vector<double> area = surface::mixed_areas(mesh);
    const Eigen::MatrixXd X = positions(mesh);
    const Eigen::MatrixXd LX = L * X;
    const auto n = static_cast<Eigen::Index>(mesh.num_vertices());

    double max_speed = 0.0;
    for (Eigen::Index i = 0; i < n; ++i) {
        if (mesh.is_boundary(static_cast<int>(i)) || area[static_cast<size_t>(i)] <= 0.0) continue;
        // |(L x)_i| / A_i = 2 |H|.
        max_speed = std::max(max_speed, 0.5 * LX.row(i).norm() / area[static_cast<size_t>(i)]);
    }

    Eigen::MatrixXd next = X;
    if (scheme == Scheme::Explicit) {
        for (Eigen::Index i = 0; i < n; ++i) {
            if (mesh.is_boundary(static_cast<int>(i)) || area[static_cast<size_t>(i)] <= 0.0) continue;
            next.row(i) -= dt * 0.5 * LX.row(i) / area[static_cast<size_t>(i)];
        }
    } else {
        // Boundary rows become identity so the fixed vertices pass through.
        std::vector<Eigen::Triplet<double>> trips;
        for (int k = 0; k < L.outerSize(); ++k)
            for (SparseMatrix::InnerIterator it(L, k); it; ++it) {
                if (mesh.is_boundary(static_cast<int>(it.row()))) continue;
                trips.emplace_back(it.row(), it.col(), 0.5 * dt * it.value());
            }
        Eigen::MatrixXd rhs = X;
        for (Eigen::Index i = 0; i < n; ++i) {
            if (mesh.is_boundary(static_cast<int>(i))) {
                trips.emplace_back(i, i, 1.0);
            } else {
                trips.emplace_back(i, i, area[static_cast<size_t>(i)]);
                rhs.row(i) *= area[static_cast<size_t>(i)];
            }
        }
        SparseMatrix A(n, n);
        A.setFromTriplets(trips.begin(), trips.end());
        // With fixed boundary rows the system is not symmetric; LU handles both cases.
        Eigen::SparseLU<SparseMatrix> solver;
        solver.compute(A);
        if (solver.info() != Eigen::Success) throw StepRejected("semi-implicit system is singular");
        next = solver.solve(rhs);
        if (solver.info() != Eigen::Success) throw StepRejected("semi-implicit solve failed");
    }
    StepResult out{checked_move(mesh, next), max_speed, false};
    out.cfl_warning = scheme == Scheme::Explicit && dt > cfl_bound(mesh);
    return out;
}

double mean_radius(const std::vector<Vec3>& points)
{
    Vec3 c = Vec3::Zero();
    for (const auto& p : points) c += p;
    c /= static_cast<double>(points.size());
    double r = 0.0;
    for (const auto& p : points) r += (p - c).norm();
    return r / static_cast<double>(points.size());
}

TriangleMesh MeshTrajectory::mesh_at(size_t i) const { return topology->with_vertices(states.at(i)); }

MeshTrajectory mcf_run(const TriangleMesh& mesh, double dt, double t_end, Scheme scheme, const StopCriteria& stop)
{
    if (!(dt > 0.0) || !(t_end > 0.0)) throw Error("dt and t_end must be positive");
    MeshTrajectory traj;
    traj.topology = std::make_shared<const TriangleMesh>(mesh);
    const double area0 = surface::mesh_area(mesh);
    traj.record(0.0, mesh.vertices(), area0, 0.0);

    TriangleMesh current = mesh;
    double t = 0.0;
    double prev_t = 0.0, prev_area = area0, area = area0, last_speed = 0.0;
    long steps = 0;
    const double min_dt = stop.min_dt_fraction * dt;
    const double t_tol = 1e-12 * t_end;
    bool recorded_last = true;

    traj.stop = StopReason::EndTime;
    while (t < t_end - t_tol) {
        if (steps >= stop.max_steps) {
            traj.stop = StopReason::MaxSteps;
            break;
        }
        double h = dt;
        if (stop.adaptive) h = std::min(h, stop.cfl_safety * cfl_bound(current));
        if (h < min_dt) {
            traj.stop = StopReason::Degenerate;
            traj.message = "time step collapsed below the floor";
            break;
        }
        h = std::min(h, t_end - t);
        StepResult res{current, 0.0, false};
        bool ok = false;
        while (!ok) {
            try {
                res = mcf_step(current, h, scheme);
                ok = true;
            } catch (const StepRejected& e) {
                traj.step_log.push_back({t, h, false, e.what()});
                if (!stop.adaptive || h / 2 < min_dt) break;
                h /= 2;
            }
        }
        if (!ok) {
            traj.stop = StopReason::Degenerate;
            traj.message = traj.step_log.back().note;
            break;
        }
        traj.step_log.push_back({t, h, true, res.cfl_warning ? "cfl" : ""});
        ++steps;
        prev_t = t;
        prev_area = area;
        t = (t_end - (t + h) <= t_tol) ? t_end : t + h;
        current = std::move(res.mesh);
        area = surface::mesh_area(current);
        last_speed = res.max_speed;
        recorded_last = false;
        if (steps % stop.record_every == 0) {
            traj.record(t, current.vertices(), area, last_speed);
            recorded_last = true;
        }
        if (area < stop.area_fraction * area0) {
            traj.stop = StopReason::AreaCollapse;
            // The area of a shrinking sphere is linear in t.
            if (prev_area > area) traj.extinction_time = t + area * (t - prev_t) / (prev_area - area);
            break;
        }
    }
    if (!recorded_last) traj.record(t, current.vertices(), area, last_speed);
    return traj;
}

} // namespace geolab::flow
