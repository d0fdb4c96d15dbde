#pragma once

#include <geolab/chart/metric_chart.hpp>

#include <functional>

namespace geolab::chart {

using VectorField = std::function<Eigen::VectorXd(const Vec&)>;

/// Laplace-Beltrami Δ = −div grad applied componentwise:
/// Δf = −g^{ij}(∂_i∂_j f − Γ^k_ij ∂_k f). Derivatives of f are central
/// differences with step h; the metric jet uses metric_h.
Eigen::VectorXd laplace_beltrami(const MetricChart& chart, const VectorField& f, const Vec& x, double h = 1e-4,
                                 double metric_h = 1e-5);

} // namespace geolab::chart
