#pragma once

#include <geolab/chart/metric_chart.hpp>

#include <vector>

namespace geolab::chart {

struct BallOptions {
    int n_eta = 6;     // Gauss-Legendre nodes in sin^2(eta)
    int n_angle = 10;  // trapezoid nodes per Hopf angle
    int steps = 48;    // RK4 steps over the largest radius
    double h = 1e-3;   // metric difference step
};

/// Volume of the geodesic ball B(p, r) by polar shooting (n = 4 only).
/// Throws PartialBall when a geodesic leaves the chart box before radius r.
double geodesic_ball_volume(const MetricChart& chart, const Vec& p, double r, const BallOptions& opt = {});

struct VolumeProfile {
    std::vector<double> radii;
    std::vector<double> volumes;
    std::vector<double> ratios; // Vol / r^4
    bool non_increasing = false;
    bool strictly_decreasing = false;
    bool strictly_increasing = false;
};

/// Vol(B(p, r)) / r^4 for ascending radii. Monotonicity verdicts use a
/// relative tolerance tol on consecutive differences.
VolumeProfile volume_ratio_profile(const MetricChart& chart, const Vec& p, const std::vector<double>& radii,
                                   const BallOptions& opt = {}, double tol = 1e-9);

struct BallProfile {
    std::vector<double> radii;
    std::vector<double> volumes;
    std::vector<double> energies; // integral of |Rm|^2, zero unless requested
};

/// Volumes (and |Rm|^2 energies) of B(p, r) for ascending radii in one shooting pass.
BallProfile ball_profile(const MetricChart& chart, const Vec& p, const std::vector<double>& radii,
                         const BallOptions& opt = {}, bool energies = true);

struct RegularityProbe {
    double energy = 0.0; // integral of |Rm|^2 over B(p, r)
    double peak = 0.0;   // sup of |Rm| over B(p, r/2), times (r/2)^2
    double volume = 0.0;
};

RegularityProbe regularity_probe(const MetricChart& chart, const Vec& p, double r, const BallOptions& opt = {});

} // namespace geolab::chart
