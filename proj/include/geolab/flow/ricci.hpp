#pragma once

#include <geolab/chart/metric_chart.hpp>
#include <geolab/flow/trajectory.hpp>

#include <Eigen/Core>

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace geolab::flow {

using Params = Eigen::VectorXd;

/// Finite-dimensional family of metrics g(theta). The metric must be linear
/// and homogeneous in theta, so theta -> c theta is the rescaling g -> c g.
struct MetricFamily {
    std::string name;
    Params lo, hi; // declared parameter box
    std::function<chart::MetricChart(const Params&)> build;
    std::vector<chart::Vec> samples; // points where Ric is projected
    std::function<double(const Params&)> volume; // optional closed form

    bool contains(const Params& theta) const;
};

/// Round unit S^4 scaled by s; Ric = 3 g_0 for every s.
MetricFamily s4_scale_family();
/// diag(theta_1..theta_4) on the unit-period torus.
MetricFamily flat_torus_family();
/// S^2(a) x S^2(b) with a, b the squared radii.
MetricFamily s2xs2_family();
/// delta + theta x_1^2 e_2 (x) e_2, whose Ricci tensor leaves the family.
MetricFamily perturbed_family();

struct Projection {
    Params rate;           // d theta / dt
    double residual = 0.0; // |A rate - b| / |b| with b = -2 Ric stacked over samples
};

constexpr double kProjectionTolerance = 1e-5;

/// Least-squares fit of -2 Ric by d g / d theta over the family samples.
/// Throws ProjectionResidual above tol.
Projection project_ricci(const MetricFamily& family, const Params& theta, double tol = kProjectionTolerance);

/// Volume of g(theta): closed form when registered, else chart quadrature.
double family_volume(const MetricFamily& family, const Params& theta);

using ParamTrajectory = FlowTrajectory<Params>;

/// RK4 on d theta / dt = projected -2 Ric. In normalized mode every step is
/// followed by theta -> c theta restoring the initial volume.
ParamTrajectory ricci_flow_family(const MetricFamily& family, const Params& theta0, double dt, double t_end,
                                  bool normalized = false);

} // namespace geolab::flow
