#pragma once

#include <geolab/decomposition/ball_region.hpp>

#include <string>
#include <vector>

namespace geolab::decomposition {

struct AreaProfile {
    std::vector<double> radii;
    std::vector<double> areas;
    std::vector<double> ratios; // Area / (pi r^2)
    bool non_decreasing = false;
    double min_ratio = 0.0;
};

/// Area(Σ ∩ B(F(c), r)) / (π r²) for ascending radii. Consecutive ratios may
/// drop by at most tol before the profile counts as decreasing.
AreaProfile area_ratio_profile(const ParametricPatch& patch, const Vec2& c, const std::vector<double>& radii,
                               double tol = 1e-9, const RegionOptions& opt = {});

/// radius,area,ratio
std::string area_profile_csv(const AreaProfile& profile);

} // namespace geolab::decomposition
