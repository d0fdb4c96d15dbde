#include <geolab/chart/curvature.hpp>
#include <geolab/chart/functionals.hpp>
#include <geolab/common/error.hpp>
#include <geolab/common/quadrature.hpp>

#include <Eigen/LU>
#include <fmt/core.h>

#include <cmath>
#include <numbers>

namespace geolab::chart {

namespace {

void accumulate(const MetricChart& chart, const Vec& x, double w, double h, ChartIntegrals& acc)
{
    const auto pack = curvature_from_jet(analytic_jet(chart, x, h));
    const double dvol = std::sqrt(pack.g.determinant());
    acc.volume += w * dvol;
    acc.total_scalar += w * pack.R * dvol;
}

} // namespace

ChartIntegrals chart_integrals(const MetricChart& chart, const IntegrationOptions& opt)
{
    const int n = chart.dim();
    ChartIntegrals acc;
    if (chart.cover() == Cover::Box) {
        std::vector<QuadratureRule> rules;
        const Box& box = chart.integration_box();
        for (int a = 0; a < n; ++a) rules.push_back(gauss_legendre(opt.nodes, box.lo[a], box.hi[a]));
        std::vector<int> idx(n, 0);
        Vec x(n);
        while (true) {
            double w = 1.0;
            for (int a = 0; a < n; ++a) {
                x[a] = rules[a].nodes[idx[a]];
                w *= rules[a].weights[idx[a]];
            }
            accumulate(chart, x, w, opt.h, acc);
            int a = 0;
            while (a < n && ++idx[a] == opt.nodes) idx[a++] = 0;
            if (a == n) break;
        }
        return acc;
    }
    if (n != 4) throw Error("radial cover is implemented for four-dimensional charts");
    // r = tan(s) maps [0, pi/2) onto [0, inf); dx = r^3 sec^2(s) ds dOmega.
    const auto radial = gauss_legendre(opt.nodes, 0.0, std::numbers::pi / 2);
    const auto sphere = s3_product_rule(opt.n_eta, opt.n_angle);
    for (size_t i = 0; i < radial.nodes.size(); ++i) {
        const double s = radial.nodes[i];
        const double r = std::tan(s);
        const double c = std::cos(s);
        const double jac = r * r * r / (c * c) * radial.weights[i];
        const double h = opt.h * std::max(1.0, r);
        for (const auto& node : sphere) accumulate(chart, r * node.direction, jac * node.weight, h, acc);
    }
    return acc;
}

double einstein_hilbert(const MetricChart& chart, const IntegrationOptions& opt)
{
    const int n = chart.dim();
    auto value = [n](const ChartIntegrals& I) { return I.total_scalar / std::pow(I.volume, (n - 2.0) / n); };
    const auto fine = chart_integrals(chart, opt);
    if (!(fine.volume > 0.0) || !std::isfinite(fine.total_scalar))
        throw SolverNonConvergence("Einstein-Hilbert quadrature produced a non-finite value");
    if (!opt.check_convergence) return value(fine);
    // A coarser companion rule flags an under-resolved integrand.
    IntegrationOptions coarse = opt;
    coarse.nodes = std::max(2, opt.nodes - 4);
    coarse.n_angle = std::max(2, opt.n_angle - 2);
    const double a = value(fine), b = value(chart_integrals(chart, coarse));
    if (std::abs(a - b) > 1e-2 * (1.0 + std::abs(a)))
        throw SolverNonConvergence(fmt::format("Einstein-Hilbert quadrature unresolved on chart '{}' ({} vs {})",
                                               chart.name(), a, b));
    return a;
}

} // namespace geolab::chart
