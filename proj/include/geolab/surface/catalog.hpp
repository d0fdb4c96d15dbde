#pragma once

#include <geolab/surface/patch.hpp>

#include <string>
#include <vector>

namespace geolab::surface {

// Built-in parametric patches. All carry analytic first and second partials.

/// z = 0 over [-half, half]^2.
ParametricPatch plane_patch(double half_extent = 1.0);
/// Polar disk (r cos t, r sin t, 0), r in [0, radius], t periodic; r = 0 collapses.
ParametricPatch disk_patch(double radius = 1.0);
/// (R cos v cos u, R cos v sin u, R sin v), u in [0, 2 pi) periodic, v in [-pi/2, pi/2].
ParametricPatch sphere_patch(double radius = 1.0);
/// (cosh v cos u, cosh v sin u, v), u periodic, |v| <= half_height.
ParametricPatch catenoid_patch(double half_height = 1.0);
/// (u - u^3/3 + u v^2, v - v^3/3 + v u^2, u^2 - v^2) on [-extent, extent]^2.
ParametricPatch enneper_patch(double extent = 1.0);
/// Bour's minimal surface in polar parameters (r, t), r in [r0, r1], t in [0, 2 pi].
ParametricPatch bour_patch(double r0 = 0.2, double r1 = 1.0);
/// (v cos u, v sin u, u) with u in [-pi, pi], v in [-extent, extent].
ParametricPatch helicoid_patch(double extent = 1.0);
/// Torus of revolution, both directions periodic.
ParametricPatch torus_patch(double major = 2.0, double minor = 0.75);

/// Names accepted by patch_by_name.
std::vector<std::string> patch_names();
/// Catalog lookup with default parameters; throws std::out_of_range on unknown names.
ParametricPatch patch_by_name(const std::string& name);

// Graph functions z = u(x, y) with analytic jets.

GraphFunction affine_graph(double a, double b, double c);
/// u = x^2 (not minimal; residual 2).
GraphFunction parabola_graph();
/// u = ln(cos x) - ln(cos y) on |x|, |y| < extent < pi/2.
GraphFunction scherk_graph(double extent = 1.0);
/// u = atan2(y, x) on x in [lo, hi], y in [lo, hi] with lo > 0.
GraphFunction helicoid_graph();
/// Upper catenoid sheet u = acosh(sqrt(x^2 + y^2)) on an annular box away from r = 1.
GraphFunction catenoid_graph();

/// Graphs that solve the minimal surface equation.
std::vector<GraphFunction> minimal_graphs();

} // namespace geolab::surface
