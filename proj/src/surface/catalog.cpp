#include <geolab/surface/catalog.hpp>

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace geolab::surface {

namespace {

constexpr double kPi = std::numbers::pi;

} // namespace

ParametricPatch plane_patch(double half_extent)
{
    return ParametricPatch(
        "plane", {-half_extent, half_extent, -half_extent, half_extent},
        [](double u, double v) { return Vec3(u, v, 0); },
        [](double, double) { return std::array<Vec3, 2>{Vec3(1, 0, 0), Vec3(0, 1, 0)}; },
        [](double, double) {
            return std::array<Vec3, 3>{Vec3::Zero(), Vec3::Zero(), Vec3::Zero()};
        });
}

ParametricPatch disk_patch(double radius)
{
    // u = r, v = angle keeps X_u x X_v along +z.
    return ParametricPatch(
        "disk", {0.0, radius, 0.0, 2 * kPi, false, true},
        [](double r, double t) { return Vec3(r * std::cos(t), r * std::sin(t), 0); },
        [](double r, double t) {
            return std::array<Vec3, 2>{Vec3(std::cos(t), std::sin(t), 0),
                                       Vec3(-r * std::sin(t), r * std::cos(t), 0)};
        },
        [](double r, double t) {
            return std::array<Vec3, 3>{Vec3::Zero(), Vec3(-std::sin(t), std::cos(t), 0),
                                       Vec3(-r * std::cos(t), -r * std::sin(t), 0)};
        });
}

ParametricPatch sphere_patch(double R)
{
    return ParametricPatch(
        "sphere", {0.0, 2 * kPi, -kPi / 2, kPi / 2, true, false},
        [R](double u, double v) {
            return Vec3(R * std::cos(v) * std::cos(u), R * std::cos(v) * std::sin(u),
                        R * std::sin(v));
        },
        [R](double u, double v) {
            const double cu = std::cos(u), su = std::sin(u), cv = std::cos(v), sv = std::sin(v);
            return std::array<Vec3, 2>{Vec3(-R * cv * su, R * cv * cu, 0),
                                       Vec3(-R * sv * cu, -R * sv * su, R * cv)};
        },
        [R](double u, double v) {
            const double cu = std::cos(u), su = std::sin(u), cv = std::cos(v), sv = std::sin(v);
            return std::array<Vec3, 3>{Vec3(-R * cv * cu, -R * cv * su, 0),
                                       Vec3(R * sv * su, -R * sv * cu, 0),
                                       Vec3(-R * cv * cu, -R * cv * su, -R * sv)};
        });
}

ParametricPatch catenoid_patch(double a)
{
    return ParametricPatch(
        "catenoid", {0.0, 2 * kPi, -a, a, true, false},
        [](double u, double v) {
            return Vec3(std::cosh(v) * std::cos(u), std::cosh(v) * std::sin(u), v);
        },
        [](double u, double v) {
            const double ch = std::cosh(v), sh = std::sinh(v), cu = std::cos(u), su = std::sin(u);
            return std::array<Vec3, 2>{Vec3(-ch * su, ch * cu, 0), Vec3(sh * cu, sh * su, 1)};
        },
        [](double u, double v) {
            const double ch = std::cosh(v), sh = std::sinh(v), cu = std::cos(u), su = std::sin(u);
            return std::array<Vec3, 3>{Vec3(-ch * cu, -ch * su, 0), Vec3(-sh * su, sh * cu, 0),
                                       Vec3(ch * cu, ch * su, 0)};
        });
}

ParametricPatch enneper_patch(double L)
{
    return ParametricPatch(
        "enneper", {-L, L, -L, L},
        [](double u, double v) {
            return Vec3(u - u * u * u / 3 + u * v * v, v - v * v * v / 3 + v * u * u, u * u - v * v);
        },
        [](double u, double v) {
            return std::array<Vec3, 2>{Vec3(1 - u * u + v * v, 2 * u * v, 2 * u),
                                       Vec3(2 * u * v, 1 - v * v + u * u, -2 * v)};
        },
        [](double u, double v) {
            return std::array<Vec3, 3>{Vec3(-2 * u, 2 * v, 2), Vec3(2 * v, 2 * u, 0),
                                       Vec3(2 * u, -2 * v, -2)};
        });
}

ParametricPatch bour_patch(double r0, double r1)
{
    return ParametricPatch(
        "bour", {r0, r1, 0.0, 2 * kPi},
        [](double r, double t) {
            return Vec3(r * std::cos(t) - 0.5 * r * r * std::cos(2 * t),
                        -r * std::sin(t) - 0.5 * r * r * std::sin(2 * t),
                        4.0 / 3.0 * std::pow(r, 1.5) * std::cos(1.5 * t));
        },
        [](double r, double t) {
            const double c1 = std::cos(t), s1 = std::sin(t), c2 = std::cos(2 * t),
                         s2 = std::sin(2 * t), c3 = std::cos(1.5 * t), s3 = std::sin(1.5 * t);
            const double sr = std::sqrt(r);
            return std::array<Vec3, 2>{Vec3(c1 - r * c2, -s1 - r * s2, 2 * sr * c3),
                                       Vec3(-r * s1 + r * r * s2, -r * c1 - r * r * c2,
                                            -2 * r * sr * s3)};
        },
        [](double r, double t) {
            const double c1 = std::cos(t), s1 = std::sin(t), c2 = std::cos(2 * t),
                         s2 = std::sin(2 * t), c3 = std::cos(1.5 * t), s3 = std::sin(1.5 * t);
            const double sr = std::sqrt(r);
            return std::array<Vec3, 3>{
                Vec3(-c2, -s2, c3 / sr), Vec3(-s1 + 2 * r * s2, -c1 - 2 * r * c2, -3 * sr * s3),
                Vec3(-r * c1 + 2 * r * r * c2, r * s1 + 2 * r * r * s2, -3 * r * sr * c3)};
        });
}

ParametricPatch helicoid_patch(double L)
{
    return ParametricPatch(
        "helicoid", {-kPi, kPi, -L, L},
        [](double u, double v) { return Vec3(v * std::cos(u), v * std::sin(u), u); },
        [](double u, double v) {
            return std::array<Vec3, 2>{Vec3(-v * std::sin(u), v * std::cos(u), 1),
                                       Vec3(std::cos(u), std::sin(u), 0)};
        },
        [](double u, double v) {
            return std::array<Vec3, 3>{Vec3(-v * std::cos(u), -v * std::sin(u), 0),
                                       Vec3(-std::sin(u), std::cos(u), 0), Vec3::Zero()};
        });
}

ParametricPatch torus_patch(double Rm, double rm)
{
    return ParametricPatch(
        "torus", {0.0, 2 * kPi, 0.0, 2 * kPi, true, true},
        [Rm, rm](double u, double v) {
            const double w = Rm + rm * std::cos(v);
            return Vec3(w * std::cos(u), w * std::sin(u), rm * std::sin(v));
        },
        [Rm, rm](double u, double v) {
            const double w = Rm + rm * std::cos(v);
            return std::array<Vec3, 2>{
                Vec3(-w * std::sin(u), w * std::cos(u), 0),
                Vec3(-rm * std::sin(v) * std::cos(u), -rm * std::sin(v) * std::sin(u),
                     rm * std::cos(v))};
        },
        [Rm, rm](double u, double v) {
            const double w = Rm + rm * std::cos(v);
            return std::array<Vec3, 3>{
                Vec3(-w * std::cos(u), -w * std::sin(u), 0),
                Vec3(rm * std::sin(v) * std::sin(u), -rm * std::sin(v) * std::cos(u), 0),
                Vec3(-rm * std::cos(v) * std::cos(u), -rm * std::cos(v) * std::sin(u),
                     -rm * std::sin(v))};
        });
}

std::vector<std::string> patch_names()
{
    return {"plane", "disk", "sphere", "catenoid", "enneper", "bour", "helicoid", "torus"};
}

ParametricPatch patch_by_name(const std::string& name)
{
    if (name == "plane") return plane_patch();
    if (name == "disk") return disk_patch();
    if (name == "sphere") return sphere_patch();
    if (name == "catenoid") return catenoid_patch();
    if (name == "enneper") return enneper_patch();
    if (name == "bour") return bour_patch();
    if (name == "helicoid") return helicoid_patch();
    if (name == "torus") return torus_patch();
    throw std::out_of_range("unknown patch '" + name + "'");
}

GraphFunction affine_graph(double a, double b, double c)
{
    return {"affine", {-1, 1, -1, 1}, [a, b, c](double x, double y) {
                GraphJet j;
                j.u = a * x + b * y + c;
                j.ux = a;
                j.uy = b;
                return j;
            }};
}

GraphFunction parabola_graph()
{
    return {"parabola", {-1, 1, -1, 1}, [](double x, double) {
                GraphJet j;
                j.u = x * x;
                j.ux = 2 * x;
                j.uxx = 2;
                return j;
            }};
}

GraphFunction scherk_graph(double L)
{
    return {"scherk", {-L, L, -L, L}, [](double x, double y) {
                const double tx = std::tan(x), ty = std::tan(y);
                const double cx = std::cos(x), cy = std::cos(y);
                GraphJet j;
                j.u = std::log(cx) - std::log(cy);
                j.ux = -tx;
                j.uy = ty;
                j.uxx = -1.0 / (cx * cx);
                j.uyy = 1.0 / (cy * cy);
                j.uxy = 0;
                return j;
            }};
}

GraphFunction helicoid_graph()
{
    return {"helicoid_graph", {0.5, 2.0, 0.5, 2.0}, [](double x, double y) {
                const double r2 = x * x + y * y;
                const double r4 = r2 * r2;
                GraphJet j;
                j.u = std::atan2(y, x);
                j.ux = -y / r2;
                j.uy = x / r2;
                j.uxx = 2 * x * y / r4;
                j.uyy = -2 * x * y / r4;
                j.uxy = (y * y - x * x) / r4;
                return j;
            }};
}

GraphFunction catenoid_graph()
{
    return {"catenoid_graph", {1.0, 2.5, 1.0, 2.5}, [](double x, double y) {
                const double r2 = x * x + y * y;
                const double r = std::sqrt(r2);
                const double d = r2 - 1.0;
                const double up = 1.0 / std::sqrt(d);           // u'(r)
                const double upp = -r / (d * std::sqrt(d));      // u''(r)
                GraphJet j;
                j.u = std::acosh(r);
                j.ux = up * x / r;
                j.uy = up * y / r;
                j.uxx = upp * x * x / r2 + up * y * y / (r2 * r);
                j.uyy = upp * y * y / r2 + up * x * x / (r2 * r);
                j.uxy = upp * x * y / r2 - up * x * y / (r2 * r);
                return j;
            }};
}

std::vector<GraphFunction> minimal_graphs()
{
    return {affine_graph(0.3, -0.7, 1.0), scherk_graph(1.0), helicoid_graph(), catenoid_graph()};
}

} // namespace geolab::surface
