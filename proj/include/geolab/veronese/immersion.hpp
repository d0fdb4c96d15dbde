#pragma once

#include <geolab/chart/laplacian.hpp>
#include <geolab/chart/metric_chart.hpp>

#include <optional>
#include <vector>

namespace geolab::veronese {

using Immersion = chart::VectorField;

/// Fubini-Study chart of the catalog (affine coordinates, identity at the origin).
chart::MetricChart fs_chart();

/// Projector immersion in R^8 as a function of affine chart coordinates.
Immersion projector_map();

/// <dx(v), dx(w)> / g(v, w) at x; nullopt when |g(v, w)| <= guard |v| |w|.
std::optional<double> pullback_ratio(const Immersion& map, const chart::MetricChart& chart, const chart::Vec& x,
                                     const chart::Vec& v, const chart::Vec& w, double h = 1e-5, double guard = 1e-8);

/// <dx(v), dx(w)> by central differences.
double pullback_inner(const Immersion& map, const chart::Vec& x, const chart::Vec& v, const chart::Vec& w,
                      double h = 1e-5);

struct RatioStats {
    double mean = 0.0;
    double cv = 0.0; // standard deviation / mean
    int count = 0;
};

/// Ratios pullback(v, v) / g(v, v) over the sample points and directions.
RatioStats pullback_stats(const Immersion& map, const chart::MetricChart& chart, const std::vector<chart::Vec>& points,
                          const std::vector<chart::Vec>& directions);

/// Deterministic sample points: Gaussian with the given spread, kept inside the chart box.
std::vector<chart::Vec> chart_samples(const chart::MetricChart& chart, int count, double spread, uint64_t seed,
                                      const chart::Vec& centre);

/// Unit directions drawn like chart_samples.
std::vector<chart::Vec> unit_directions(int dim, int count, uint64_t seed);

} // namespace geolab::veronese
