#pragma once

#include <geolab/chart/geodesic.hpp>
#include <geolab/chart/metric_chart.hpp>
#include <geolab/decomposition/ball_region.hpp>

#include <string>
#include <vector>

namespace geolab::decomposition {

enum class Label { Thick, Thin, Sheeted, NonSheeted };
enum class Scheme { ThickThin, Sheeted };

std::string to_string(Label l);

struct DecompositionLabels {
    Scheme scheme = Scheme::Sheeted;
    std::vector<std::vector<double>> points; // parameter or chart coordinates
    std::vector<double> scales;              // s(p) or r_eps(p)
    std::vector<double> measures;            // ball area or volume at that scale
    std::vector<Label> labels;
    double threshold = 0.0;                  // n0 or V0
    double parameter = 0.0;                  // r or eps

    size_t count(Label l) const;
};

/// Recomputes labels from the stored scales, measures and threshold.
DecompositionLabels relabel(DecompositionLabels d, double threshold);

struct StabilityOptions {
    int nu = 48, nv = 48;       // grid over the parameter box that reaches r_cap
    double rel_tol = 1e-4;      // bisection stops at rel_tol * r_cap
    double stable_above = 1e-9; // first eigenvalue threshold for "stable"
    int locate_grid = 200;      // samples used to find that box
};

/// First Dirichlet Jacobi eigenvalue on Σ ∩ B(p, rho). Boundary vertices of
/// the clipped grid are moved onto the sphere |x - p| = rho along their
/// outgoing edges. Returns +inf when no interior vertex remains.
double clipped_lambda1(const ParametricPatch& patch, const Vec3& p, double rho, double r_cap,
                       const StabilityOptions& opt = {});

/// Largest rho <= r_cap for which Σ ∩ B(p, rho) is stable, by bisection.
double stability_radius(const ParametricPatch& patch, const Vec3& p, double r_cap, const StabilityOptions& opt = {});

/// Non-sheeted iff Area(Σ ∩ B(p, s(p))) > n0 s(p)^2.
DecompositionLabels sheeted_decomposition(const ParametricPatch& patch, double r, double n0,
                                          const std::vector<Vec2>& samples, const StabilityOptions& opt = {},
                                          const RegionOptions& region = {});

/// sup of r in (0, 1] with the |Rm|^2 energy of B(p, r) at most eps. The
/// energy is sampled at n_radii equally spaced radii in one pass and the
/// crossing is interpolated in log-log coordinates.
double curvature_scale(const chart::MetricChart& chart, const chart::Vec& p, double eps,
                       const chart::BallOptions& opt = {}, int n_radii = 64);

/// Thick iff Vol(B(p, r_eps)) > V0 r_eps^4.
DecompositionLabels thick_thin(const chart::MetricChart& chart, double eps, double V0,
                               const std::vector<chart::Vec>& samples, const chart::BallOptions& opt = {});

/// sample_id,c0..,scale,measure,label
std::string labels_csv(const DecompositionLabels& d);

} // namespace geolab::decomposition
