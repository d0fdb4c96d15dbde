#include <geolab/common/error.hpp>
#include <geolab/common/quadrature.hpp>
#include <geolab/decomposition/ball_region.hpp>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/tools/roots.hpp>
#include <fmt/core.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace geolab::decomposition {

namespace {

constexpr double kPi = std::numbers::pi;

struct Box {
    double u_lo, u_hi, v_lo, v_hi;
};

Box clip_box(const ParametricPatch& patch, const Vec2& c)
{
    const auto& d = patch.domain();
    Box b{d.u0, d.u1, d.v0, d.v1};
    if (d.periodic_u) b = {c.x() - 0.5 * (d.u1 - d.u0), c.x() + 0.5 * (d.u1 - d.u0), b.v_lo, b.v_hi};
    if (d.periodic_v) b = {b.u_lo, b.u_hi, c.y() - 0.5 * (d.v1 - d.v0), c.y() + 0.5 * (d.v1 - d.v0)};
    if (c.x() < b.u_lo || c.x() > b.u_hi || c.y() < b.v_lo || c.y() > b.v_hi)
        throw Error(fmt::format("centre ({}, {}) lies outside the parameter domain", c.x(), c.y()));
    return b;
}

double box_exit(const Box& b, const Vec2& c, const Vec2& dir)
{
    double t = std::numeric_limits<double>::infinity();
    if (dir.x() > 0) t = std::min(t, (b.u_hi - c.x()) / dir.x());
    if (dir.x() < 0) t = std::min(t, (b.u_lo - c.x()) / dir.x());
    if (dir.y() > 0) t = std::min(t, (b.v_hi - c.y()) / dir.y());
    if (dir.y() < 0) t = std::min(t, (b.v_lo - c.y()) / dir.y());
    return std::max(t, 0.0);
}

double root_on(const std::function<double(double)>& g, double a, double b)
{
    std::uintmax_t iters = 200;
    const auto tol = [](double x, double y) { return std::abs(x - y) <= 1e-15 * std::max(1.0, std::abs(x)); };
    const auto [lo, hi] = boost::math::tools::toms748_solve(g, a, b, tol, iters);
    return 0.5 * (lo + hi);
}

// Parameter length of the ray from c inside the ball, up to the box exit.
double ray_extent(const ParametricPatch& patch, const Vec2& c, const Vec3& p, double r, const Vec2& dir,
                  double tmax, int march)
{
    const auto g = [&](double t) { return (patch.position(c.x() + t * dir.x(), c.y() + t * dir.y()) - p).norm() - r; };
    double prev = 0.0;
    for (int k = 1; k <= march; ++k) {
        const double t = tmax * k / march;
        if (g(t) < 0) {
            prev = t;
            continue;
        }
        const double root = prev == t ? t : root_on(g, prev, t);
        for (int j = k + 1; j <= march; ++j)
            if (g(tmax * j / march) < 0)
                throw RefinementError(fmt::format("ball of radius {} is not star-shaped from the centre", r));
        return root;
    }
    return tmax;
}

double safe_integrand(const ParametricPatch& patch, double u, double v, const Integrand& f)
{
    try {
        const auto forms = surface::evaluate_forms(patch, u, v);
        return forms.area_element() * (f ? f(forms) : 1.0);
    } catch (const DegenerateImmersion&) {
        return 0.0; // collapsed parameter lines carry no area
    }
}

double integrate_once(const ParametricPatch& patch, const Vec2& c, double r, const Integrand& f, int n_rad,
                      const RegionOptions& opt)
{
    const Box b = clip_box(patch, c);
    const Vec3 p = patch.position(c.x(), c.y());
    const QuadratureRule rule = gauss_legendre(n_rad, 0.0, 1.0);
    auto g = [&](double theta) {
        const Vec2 dir(std::cos(theta), std::sin(theta));
        const double T = ray_extent(patch, c, p, r, dir, box_exit(b, c, dir), opt.march);
        double s = 0.0;
        for (size_t i = 0; i < rule.nodes.size(); ++i) {
            const double t = T * rule.nodes[i];
            s += rule.weights[i] * t * safe_integrand(patch, c.x() + t * dir.x(), c.y() + t * dir.y(), f);
        }
        return s * T;
    };
    // Corners of the box are kinks of the ray length; split there.
    std::vector<double> breaks{0.0, 2 * kPi};
    for (double u : {b.u_lo, b.u_hi})
        for (double v : {b.v_lo, b.v_hi}) {
            double a = std::atan2(v - c.y(), u - c.x());
            if (a < 0) a += 2 * kPi;
            breaks.push_back(a);
        }
    std::sort(breaks.begin(), breaks.end());
    double total = 0.0, err_total = 0.0;
    for (size_t i = 0; i + 1 < breaks.size(); ++i) {
        if (breaks[i + 1] - breaks[i] < 1e-14) continue;
        double err = 0.0;
        total += boost::math::quadrature::gauss_kronrod<double, 21>::integrate(g, breaks[i], breaks[i + 1], 15, 1e-11, &err);
        err_total += err;
    }
    if (err_total > opt.tol) throw RefinementError(fmt::format("angular quadrature error {:.3g} above {:.3g}", err_total, opt.tol));
    return total;
}

} // namespace

double ball_integral(const ParametricPatch& patch, const Vec2& c, double r, const Integrand& f, const RegionOptions& opt)
{
    if (!(r > 0.0)) return 0.0;
    int n = opt.radial_nodes;
    double prev = integrate_once(patch, c, r, f, n, opt);
    for (int level = 0; level < opt.max_refinements; ++level) {
        n += n / 2;
        const double next = integrate_once(patch, c, r, f, n, opt);
        if (std::abs(next - prev) < opt.tol) return next;
        prev = next;
    }
    throw RefinementError(fmt::format("ball integral of radius {} unresolved after {} refinements", r, opt.max_refinements));
}

double ball_area(const ParametricPatch& patch, const Vec2& c, double r, const RegionOptions& opt)
{
    return ball_integral(patch, c, r, {}, opt);
}

double ball_sup(const ParametricPatch& patch, const Vec2& c, double r, const Integrand& f, int n_theta, int n_radial)
{
    const Box b = clip_box(patch, c);
    const Vec3 p = patch.position(c.x(), c.y());
    double best = -std::numeric_limits<double>::infinity();
    auto visit = [&](double u, double v) {
        try {
            best = std::max(best, f(surface::evaluate_forms(patch, u, v)));
        } catch (const DegenerateImmersion&) {
        }
    };
    visit(c.x(), c.y());
    for (int i = 0; i < n_theta; ++i) {
        const double theta = 2 * kPi * i / n_theta;
        const Vec2 dir(std::cos(theta), std::sin(theta));
        const double T = ray_extent(patch, c, p, r, dir, box_exit(b, c, dir), 96);
        for (int j = 1; j <= n_radial; ++j) {
            const double t = T * j / n_radial;
            visit(c.x() + t * dir.x(), c.y() + t * dir.y());
        }
    }
    return best;
}

} // namespace geolab::decomposition
