#include <geolab/surface/forms.hpp>

#include <geolab/common/error.hpp>

#include <fmt/format.h>

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>

namespace geolab::surface {

double FundamentalForms::area_element() const
{
    return std::sqrt(E * G - F * F);
}

FundamentalForms forms_from_jet(const PatchJet& jet, double floor)
{
    FundamentalForms out;
    out.E = jet.xu.dot(jet.xu);
    out.F = jet.xu.dot(jet.xv);
    out.G = jet.xv.dot(jet.xv);
    const double det = out.E * out.G - out.F * out.F;
    const double scale = (out.E + out.G) * (out.E + out.G);
    if (!(det > floor * scale)) {
        throw DegenerateImmersion(
            fmt::format("EG - F^2 = {:.3e} below floor (E = {:.3e}, G = {:.3e})", det, out.E, out.G));
    }
    out.normal = jet.xu.cross(jet.xv).normalized();
    out.e = -jet.xuu.dot(out.normal);
    out.f = -jet.xuv.dot(out.normal);
    out.g = -jet.xvv.dot(out.normal);

    out.H = (out.e * out.G - 2 * out.f * out.F + out.g * out.E) / (2 * det);
    out.K = (out.e * out.g - out.f * out.f) / det;

    // Shape operator W = I^{-1} II; |A|^2 = tr(W^2).
    Eigen::Matrix2d first, second;
    first << out.E, out.F, out.F, out.G;
    second << out.e, out.f, out.f, out.g;
    const Eigen::Matrix2d W = first.inverse() * second;
    out.a2 = (W * W).trace();

    const double disc = std::sqrt(std::max(out.H * out.H - out.K, 0.0));
    out.k1 = out.H + disc;
    out.k2 = out.H - disc;
    return out;
}

FundamentalForms evaluate_forms(const ParametricPatch& patch, double u, double v, double floor)
{
    return forms_from_jet(patch.jet(u, v), floor);
}

double msq_residual(const GraphJet& j)
{
    return (1 + j.ux * j.ux) * j.uyy - 2 * j.ux * j.uy * j.uxy + (1 + j.uy * j.uy) * j.uxx;
}

double msq_residual(const GraphFunction& graph, double x, double y)
{
    return msq_residual(graph.eval(x, y));
}

} // namespace geolab::surface
