#pragma once

#include <geolab/decomposition/ball_region.hpp>

namespace geolab::decomposition {

struct ChoiSchoen {
    double energy = 0.0; // integral of |A|^2 over Σ ∩ B(p, r)
    double peak = 0.0;   // sup of |A|^2 over Σ ∩ B(p, r/2), times (r/2)^2
};

ChoiSchoen choi_schoen_probe(const ParametricPatch& patch, const Vec2& c, double r, const RegionOptions& opt = {});

/// max |½Δ|A|² − |∇A|² + |A|⁴| over an n x n grid of interior parameter
/// points (10% margin). Intrinsic derivatives use central differences of the
/// fundamental forms with step h. Throws Rejected unless |H| <= 1e-8 at
/// every sample.
double simons_residual(const ParametricPatch& patch, int n = 8, double h = 1e-3);

} // namespace geolab::decomposition
