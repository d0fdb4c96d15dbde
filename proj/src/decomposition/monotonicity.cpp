#include <geolab/common/csv.hpp>
#include <geolab/common/error.hpp>
#include <geolab/decomposition/monotonicity.hpp>

#include <algorithm>
#include <numbers>

namespace geolab::decomposition {

AreaProfile area_ratio_profile(const ParametricPatch& patch, const Vec2& c, const std::vector<double>& radii, double tol,
                               const RegionOptions& opt)
{
    if (radii.empty() || !std::is_sorted(radii.begin(), radii.end()) || radii.front() <= 0.0)
        throw Error("radii must be positive and ascending");
    AreaProfile out;
    out.radii = radii;
    for (double r : radii) {
        const double area = ball_area(patch, c, r, opt);
        out.areas.push_back(area);
        out.ratios.push_back(area / (std::numbers::pi * r * r));
    }
    out.non_decreasing = true;
    for (size_t i = 1; i < out.ratios.size(); ++i)
        out.non_decreasing = out.non_decreasing && out.ratios[i] >= out.ratios[i - 1] - tol;
    out.min_ratio = *std::min_element(out.ratios.begin(), out.ratios.end());
    return out;
}

std::string area_profile_csv(const AreaProfile& profile)
{
    CsvWriter csv({"radius", "area", "ratio"});
    for (size_t i = 0; i < profile.radii.size(); ++i)
        csv.row({format_double(profile.radii[i]), format_double(profile.areas[i]), format_double(profile.ratios[i])});
    return csv.str();
}

} // namespace geolab::decomposition
