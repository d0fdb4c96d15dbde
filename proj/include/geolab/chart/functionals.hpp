#pragma once

#include <geolab/chart/metric_chart.hpp>

namespace geolab::chart {

struct IntegrationOptions {
    int nodes = 12;    // Gauss-Legendre nodes per box axis, or radial nodes
    int n_eta = 4;     // S^3 rule for Cover::Radial
    int n_angle = 8;
    double h = 1e-3;   // curvature step, scaled by max(1, |x|) for Radial
    bool check_convergence = true; // compare against a coarser companion rule
};

struct ChartIntegrals {
    double volume = 0.0;
    double total_scalar = 0.0; // integral of R dvol
};

/// Volume and total scalar curvature over the chart cover.
ChartIntegrals chart_integrals(const MetricChart& chart, const IntegrationOptions& opt = {});

/// Integral of R dvol divided by Vol^{(n-2)/n}; scale invariant. Throws
/// SolverNonConvergence when a coarser companion rule disagrees by over 1%.
double einstein_hilbert(const MetricChart& chart, const IntegrationOptions& opt = {});

} // namespace geolab::chart
