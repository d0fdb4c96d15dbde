#pragma once

#include <Eigen/Core>

#include <array>
#include <functional>
#include <optional>
#include <string>

namespace geolab::surface {

using Vec2 = Eigen::Vector2d;
using Vec3 = Eigen::Vector3d;

struct ParamDomain {
    double u0 = 0.0;
    double u1 = 1.0;
    double v0 = 0.0;
    double v1 = 1.0;
    // A periodic direction may be evaluated outside [lo, hi]; the evaluator wraps itself.
    bool periodic_u = false;
    bool periodic_v = false;

    double span_u() const { return u1 - u0; }
    double span_v() const { return v1 - v0; }
    bool contains(double u, double v) const;
    bool interior(double u, double v) const;
};

/// Position and its first and second partials at one parameter point.
struct PatchJet {
    Vec3 x, xu, xv, xuu, xuv, xvv;
};

/// Smooth immersion of a parameter rectangle into R^3.
///
/// Derivative evaluators are optional. Missing first partials fall back to
/// central differences with step 1e-5 * span; missing second partials are
/// central second differences with step 1e-4 * span (the first-derivative
/// step would lose about six digits to cancellation).
class ParametricPatch {
public:
    using PositionFn = std::function<Vec3(double, double)>;
    using FirstFn = std::function<std::array<Vec3, 2>(double, double)>;
    using SecondFn = std::function<std::array<Vec3, 3>(double, double)>;

    ParametricPatch(std::string name, ParamDomain domain, PositionFn position,
                    FirstFn first = {}, SecondFn second = {});

    const std::string& name() const { return name_; }
    const ParamDomain& domain() const { return domain_; }
    bool has_analytic_first() const { return static_cast<bool>(first_); }
    bool has_analytic_second() const { return static_cast<bool>(second_); }

    Vec3 position(double u, double v) const { return position_(u, v); }
    /// {X_u, X_v}
    std::array<Vec3, 2> d1(double u, double v) const;
    /// {X_uu, X_uv, X_vv}
    std::array<Vec3, 3> d2(double u, double v) const;
    PatchJet jet(double u, double v) const;

    std::array<Vec3, 2> d1_finite_difference(double u, double v) const;
    std::array<Vec3, 3> d2_finite_difference(double u, double v) const;

    /// Same patch with analytic derivatives dropped (finite differences only).
    ParametricPatch without_derivatives() const;

    /// Same immersion on a different parameter rectangle.
    ParametricPatch restricted(ParamDomain domain) const;

    double fd_step_first() const;
    double fd_step_second() const;

private:
    std::string name_;
    ParamDomain domain_;
    PositionFn position_;
    FirstFn first_;
    SecondFn second_;
};

/// Value and partials of a graph z = u(x, y).
struct GraphJet {
    double u = 0, ux = 0, uy = 0, uxx = 0, uxy = 0, uyy = 0;
};

struct GraphFunction {
    std::string name;
    ParamDomain domain;
    std::function<GraphJet(double, double)> eval;
};

/// Patch (x, y) -> (x, y, u(x, y)) with derivatives taken from the graph jet.
ParametricPatch graph_patch(const GraphFunction& graph);

} // namespace geolab::surface
