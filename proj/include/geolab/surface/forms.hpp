#pragma once

#include <geolab/surface/patch.hpp>

namespace geolab::surface {

/// First and second fundamental forms with derived curvatures at one point.
///
/// Orientation: normal = X_u x X_v / |X_u x X_v|. The second form is
/// b_ij = -<X_ij, normal>, so a sphere with outward normal has k1 = k2 = 1/R.
/// H = (k1 + k2) / 2.
struct FundamentalForms {
    double E = 0, F = 0, G = 0;
    double e = 0, f = 0, g = 0;
    Vec3 normal = Vec3::Zero();
    double k1 = 0, k2 = 0; // k1 >= k2
    double H = 0;
    double K = 0;
    double a2 = 0; // |A|^2

    double area_element() const;
};

/// Default floor on EG - F^2 relative to (E + G)^2.
inline constexpr double kImmersionFloor = 1e-14;

FundamentalForms forms_from_jet(const PatchJet& jet, double floor = kImmersionFloor);

/// Throws DegenerateImmersion when EG - F^2 <= floor * (E + G)^2.
FundamentalForms evaluate_forms(const ParametricPatch& patch, double u, double v,
                                double floor = kImmersionFloor);

/// Minimal surface equation residual
/// (1 + u_x^2) u_yy - 2 u_x u_y u_xy + (1 + u_y^2) u_xx.
double msq_residual(const GraphJet& j);
double msq_residual(const GraphFunction& graph, double x, double y);

} // namespace geolab::surface
