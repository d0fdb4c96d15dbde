#include <geolab/surface/patch.hpp>

#include <utility>

namespace geolab::surface {

bool ParamDomain::contains(double u, double v) const
{
    const bool in_u = periodic_u || (u >= u0 && u <= u1);
    const bool in_v = periodic_v || (v >= v0 && v <= v1);
    return in_u && in_v;
}

bool ParamDomain::interior(double u, double v) const
{
    const bool in_u = periodic_u || (u > u0 && u < u1);
    const bool in_v = periodic_v || (v > v0 && v < v1);
    return in_u && in_v;
}

ParametricPatch::ParametricPatch(std::string name, ParamDomain domain, PositionFn position,
                                 FirstFn first, SecondFn second)
    : name_(std::move(name)),
      domain_(domain),
      position_(std::move(position)),
      first_(std::move(first)),
      second_(std::move(second))
{
}

double ParametricPatch::fd_step_first() const
{
    return 1e-5 * std::max(domain_.span_u(), domain_.span_v());
}

double ParametricPatch::fd_step_second() const
{
    return 1e-4 * std::max(domain_.span_u(), domain_.span_v());
}

std::array<Vec3, 2> ParametricPatch::d1_finite_difference(double u, double v) const
{
    const double h = fd_step_first();
    return {(position_(u + h, v) - position_(u - h, v)) / (2 * h),
            (position_(u, v + h) - position_(u, v - h)) / (2 * h)};
}

std::array<Vec3, 3> ParametricPatch::d2_finite_difference(double u, double v) const
{
    const double h = fd_step_second();
    const Vec3 c = position_(u, v);
    const Vec3 xuu = (position_(u + h, v) - 2 * c + position_(u - h, v)) / (h * h);
    const Vec3 xvv = (position_(u, v + h) - 2 * c + position_(u, v - h)) / (h * h);
    const Vec3 xuv = (position_(u + h, v + h) - position_(u + h, v - h) -
                      position_(u - h, v + h) + position_(u - h, v - h)) /
                     (4 * h * h);
    return {xuu, xuv, xvv};
}

std::array<Vec3, 2> ParametricPatch::d1(double u, double v) const
{
    return first_ ? first_(u, v) : d1_finite_difference(u, v);
}

std::array<Vec3, 3> ParametricPatch::d2(double u, double v) const
{
    return second_ ? second_(u, v) : d2_finite_difference(u, v);
}

PatchJet ParametricPatch::jet(double u, double v) const
{
    const auto [xu, xv] = d1(u, v);
    const auto [xuu, xuv, xvv] = d2(u, v);
    return {position_(u, v), xu, xv, xuu, xuv, xvv};
}

ParametricPatch ParametricPatch::without_derivatives() const
{
    return ParametricPatch(name_, domain_, position_);
}

ParametricPatch ParametricPatch::restricted(ParamDomain domain) const
{
    return ParametricPatch(name_, domain, position_, first_, second_);
}

ParametricPatch graph_patch(const GraphFunction& graph)
{
    auto eval = graph.eval;
    return ParametricPatch(
        graph.name, graph.domain,
        [eval](double x, double y) { return Vec3(x, y, eval(x, y).u); },
        [eval](double x, double y) {
            const GraphJet j = eval(x, y);
            return std::array<Vec3, 2>{Vec3(1, 0, j.ux), Vec3(0, 1, j.uy)};
        },
        [eval](double x, double y) {
            const GraphJet j = eval(x, y);
            return std::array<Vec3, 3>{Vec3(0, 0, j.uxx), Vec3(0, 0, j.uxy), Vec3(0, 0, j.uyy)};
        });
}

} // namespace geolab::surface
