#include <geolab/chart/curvature.hpp>
#include <geolab/chart/geodesic.hpp>
#include <geolab/common/error.hpp>
#include <geolab/common/quadrature.hpp>

#include <Eigen/Eigenvalues>
#include <Eigen/LU>
#include <fmt/core.h>

#include <algorithm>
#include <cmath>

namespace geolab::chart {

namespace {

// Geodesic t -> exp_p(t w) with the Jacobi fields J_a(0) = 0, J_a'(0) = E e_a.
struct State {
    Vec x, v;
    Mat J, Jd;
    double volume = 0.0;
    double energy = 0.0;

    State operator+(const State& o) const
    {
        return {x + o.x, v + o.v, J + o.J, Jd + o.Jd, volume + o.volume, energy + o.energy};
    }
    State operator*(double s) const { return {x * s, v * s, J * s, Jd * s, volume * s, energy * s}; }
};

struct Shooter {
    const MetricChart& chart;
    double h;
    bool curvature;
    double peak_radius;
    double peak = 0.0;

    State rate(double t, const State& s)
    {
        const int n = chart.dim();
        const MetricJet jet = analytic_jet(chart, s.x, h);
        const auto gamma = christoffel(jet);
        const auto dgamma = christoffel_derivative(jet);
        State d;
        d.x = s.v;
        d.v = Vec(n);
        for (int k = 0; k < n; ++k) d.v[k] = -s.v.dot(gamma[k] * s.v);
        d.J = s.Jd;
        d.Jd = Mat::Zero(n, n);
        for (int k = 0; k < n; ++k) {
            Mat dG = Mat::Zero(n, n); // (m, i) -> sum_j d_m Gamma^k_ij v^j
            for (int m = 0; m < n; ++m) dG.row(m) = (dgamma[m][k] * s.v).transpose();
            const Vec Gv = gamma[k] * s.v;
            for (int a = 0; a < n; ++a)
                d.Jd(k, a) = -s.J.col(a).dot(dG * s.v) - 2.0 * Gv.dot(s.Jd.col(a));
        }
        const double density = t > 0.0 ? std::sqrt(jet.g.determinant()) * std::abs(s.J.determinant()) / t : 0.0;
        d.volume = density;
        d.energy = 0.0;
        if (curvature) {
            const auto pack = curvature_from_jet(jet);
            d.energy = pack.rm_norm2 * density;
            if (t <= peak_radius * (1.0 + 1e-12)) peak = std::max(peak, std::sqrt(std::max(0.0, pack.rm_norm2)));
        }
        return d;
    }
};

struct BallData {
    std::vector<double> volumes;
    std::vector<double> energies;
    double peak = 0.0;
};

BallData integrate_ball(const MetricChart& chart, const Vec& p, const std::vector<double>& radii,
                        const BallOptions& opt, bool curvature, double peak_radius)
{
    if (chart.dim() != 4) throw Error("geodesic balls are implemented for four-dimensional charts");
    if (radii.empty()) throw Error("no radii requested");
    for (size_t i = 0; i < radii.size(); ++i)
        if (!(radii[i] > 0.0) || (i > 0 && radii[i] <= radii[i - 1])) throw Error("radii must be positive and ascending");
    if (!chart.box().contains(p, 2.0 * opt.h)) throw PartialBall("centre lies outside the chart");

    const Mat g0 = chart.checked_metric(p);
    Eigen::SelfAdjointEigenSolver<Mat> es(g0);
    const Mat E = es.eigenvectors() * es.eigenvalues().cwiseSqrt().cwiseInverse().asDiagonal() *
                  es.eigenvectors().transpose();

    const double rmax = radii.back();
    BallData out;
    out.volumes.assign(radii.size(), 0.0);
    out.energies.assign(radii.size(), 0.0);
    Shooter shooter{chart, opt.h, curvature, peak_radius};

    for (const auto& node : s3_product_rule(opt.n_eta, opt.n_angle)) {
        State s{p, E * node.direction, Mat::Zero(4, 4), E, 0.0, 0.0};
        double t = 0.0;
        for (size_t c = 0; c < radii.size(); ++c) {
            const double span = radii[c] - t;
            const int n_steps = std::max(1, static_cast<int>(std::ceil(opt.steps * span / rmax - 1e-9)));
            const double dt = span / n_steps;
            for (int k = 0; k < n_steps; ++k) {
                const State k1 = shooter.rate(t, s);
                const State k2 = shooter.rate(t + dt / 2, s + k1 * (dt / 2));
                const State k3 = shooter.rate(t + dt / 2, s + k2 * (dt / 2));
                const State k4 = shooter.rate(t + dt, s + k3 * dt);
                s = s + (k1 + k2 * 2.0 + k3 * 2.0 + k4) * (dt / 6.0);
                t = (k + 1 == n_steps) ? radii[c] : t + dt;
                if (!chart.box().contains(s.x, 2.0 * opt.h))
                    throw PartialBall(fmt::format("geodesic left chart '{}' at t = {:.4g} < r = {:.4g}",
                                                  chart.name(), t, rmax));
            }
            out.volumes[c] += node.weight * s.volume;
            out.energies[c] += node.weight * s.energy;
        }
    }
    out.peak = shooter.peak;
    return out;
}

} // namespace

double geodesic_ball_volume(const MetricChart& chart, const Vec& p, double r, const BallOptions& opt)
{
    return integrate_ball(chart, p, {r}, opt, false, 0.0).volumes[0];
}

BallProfile ball_profile(const MetricChart& chart, const Vec& p, const std::vector<double>& radii,
                         const BallOptions& opt, bool energies)
{
    const auto data = integrate_ball(chart, p, radii, opt, energies, 0.0);
    return {radii, data.volumes, data.energies};
}

VolumeProfile volume_ratio_profile(const MetricChart& chart, const Vec& p, const std::vector<double>& radii,
                                   const BallOptions& opt, double tol)
{
    const auto data = integrate_ball(chart, p, radii, opt, false, 0.0);
    VolumeProfile prof;
    prof.radii = radii;
    prof.volumes = data.volumes;
    for (size_t i = 0; i < radii.size(); ++i) prof.ratios.push_back(data.volumes[i] / std::pow(radii[i], 4));
    prof.non_increasing = prof.strictly_decreasing = prof.strictly_increasing = true;
    for (size_t i = 0; i + 1 < radii.size(); ++i) {
        const double d = (prof.ratios[i + 1] - prof.ratios[i]) / std::abs(prof.ratios[i]);
        prof.non_increasing = prof.non_increasing && d <= tol;
        prof.strictly_decreasing = prof.strictly_decreasing && d < -tol;
        prof.strictly_increasing = prof.strictly_increasing && d > tol;
    }
    return prof;
}

RegularityProbe regularity_probe(const MetricChart& chart, const Vec& p, double r, const BallOptions& opt)
{
    const auto data = integrate_ball(chart, p, {r / 2, r}, opt, true, r / 2);
    RegularityProbe out;
    out.energy = data.energies[1];
    out.volume = data.volumes[1];
    out.peak = data.peak * (r / 2) * (r / 2);
    return out;
}

} // namespace geolab::chart
