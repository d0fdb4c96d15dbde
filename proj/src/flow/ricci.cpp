#include <geolab/chart/catalog.hpp>
#include <geolab/chart/curvature.hpp>
#include <geolab/chart/functionals.hpp>
#include <geolab/common/error.hpp>
#include <geolab/flow/ricci.hpp>

#include <Eigen/QR>
#include <fmt/core.h>

#include <cmath>
#include <numbers>

namespace geolab::flow {

using chart::Mat;
using chart::MetricChart;
using chart::Vec;

namespace {

constexpr double kPi = std::numbers::pi;

Vec point(std::initializer_list<double> xs)
{
    Vec v(static_cast<Eigen::Index>(xs.size()));
    Eigen::Index i = 0;
    for (double x : xs) v[i++] = x;
    return v;
}

Params params(std::initializer_list<double> xs)
{
    Params v(static_cast<Eigen::Index>(xs.size()));
    Eigen::Index i = 0;
    for (double x : xs) v[i++] = x;
    return v;
}

} // namespace

bool MetricFamily::contains(const Params& theta) const
{
    return theta.size() == lo.size() && (theta.array() >= lo.array()).all() && (theta.array() <= hi.array()).all();
}

MetricFamily s4_scale_family()
{
    MetricFamily f;
    f.name = "s4_scale";
    f.lo = params({1e-3});
    f.hi = params({1e3});
    f.build = [](const Params& t) { return chart::s4_chart().scaled(t[0]); };
    f.samples = {point({0, 0, 0, 0}), point({0.3, -0.2, 0.1, 0.4}), point({-0.7, 0.5, 0.2, -0.1})};
    f.volume = [](const Params& t) { return t[0] * t[0] * 8.0 * kPi * kPi / 3.0; };
    return f;
}

MetricFamily flat_torus_family()
{
    MetricFamily f;
    f.name = "flat_torus";
    f.lo = Params::Constant(4, 1e-3);
    f.hi = Params::Constant(4, 1e3);
    f.build = [](const Params& t) {
        const Mat g = Vec(t).asDiagonal();
        chart::Box box{Vec::Zero(4), Vec::Ones(4), std::vector<double>(4, 1.0)};
        return MetricChart("flat_torus", box, [g](const Vec&) -> Mat { return g; });
    };
    f.samples = {point({0.5, 0.5, 0.5, 0.5}), point({0.2, 0.7, 0.1, 0.9})};
    f.volume = [](const Params& t) { return std::sqrt(t.prod()); };
    return f;
}

MetricFamily s2xs2_family()
{
    MetricFamily f;
    f.name = "s2xs2";
    f.lo = Params::Constant(2, 1e-3);
    f.hi = Params::Constant(2, 1e3);
    f.build = [](const Params& t) { return chart::s2xs2_chart(t[0], t[1]); };
    f.samples = {point({1.0, 2.0, 0.7, 4.0}), point({2.0, 1.0, 1.3, 0.5})};
    f.volume = [](const Params& t) { return 16.0 * kPi * kPi * t[0] * t[1]; };
    return f;
}

MetricFamily perturbed_family()
{
    MetricFamily f;
    f.name = "perturbed";
    f.lo = params({0.0});
    f.hi = params({1.0});
    f.build = [](const Params& t) {
        const double a = t[0];
        return MetricChart("perturbed", chart::perturbed_chart().box(), [a](const Vec& x) -> Mat {
            Mat g = Mat::Identity(4, 4);
            g(1, 1) += a * x[0] * x[0];
            return g;
        });
    };
    f.samples = {point({0.5, 0.2, 0.1, 0.0}), point({-0.8, 0.0, 0.3, 0.2})};
    return f;
}

Projection project_ricci(const MetricFamily& family, const Params& theta, double tol)
{
    if (!family.contains(theta)) throw Error(fmt::format("parameters outside the box of family '{}'", family.name));
    const MetricChart chart = family.build(theta);
    const int n = chart.dim();
    const auto P = theta.size();
    const int entries = n * (n + 1) / 2;
    const auto rows = static_cast<Eigen::Index>(family.samples.size()) * entries;
    Eigen::MatrixXd A(rows, P);
    Eigen::VectorXd b(rows);

    std::vector<MetricChart> plus, minus;
    std::vector<double> eps;
    for (Eigen::Index p = 0; p < P; ++p) {
        Params tp = theta, tm = theta;
        eps.push_back(1e-6 * std::max(1.0, std::abs(theta[p])));
        tp[p] += eps.back();
        tm[p] -= eps.back();
        plus.push_back(family.build(tp));
        minus.push_back(family.build(tm));
    }
    Eigen::Index row = 0;
    for (const Vec& x : family.samples) {
        const auto pack = chart::curvature_at(chart, x);
        std::vector<Mat> dg;
        for (Eigen::Index p = 0; p < P; ++p)
            dg.push_back((plus[p].metric(x) - minus[p].metric(x)) / (2.0 * eps[static_cast<size_t>(p)]));
        for (int i = 0; i < n; ++i)
            for (int j = i; j < n; ++j, ++row) {
                b[row] = -2.0 * pack.Ric(i, j);
                for (Eigen::Index p = 0; p < P; ++p) A(row, p) = dg[static_cast<size_t>(p)](i, j);
            }
    }
    Projection out;
    out.rate = A.colPivHouseholderQr().solve(b);
    const double bn = b.norm();
    out.residual = bn > 0.0 ? (A * out.rate - b).norm() / bn : (A * out.rate).norm();
    if (out.residual > tol)
        throw ProjectionResidual(fmt::format("Ricci tensor leaves the tangent space of family '{}' (residual {:.3g})",
                                             family.name, out.residual));
    return out;
}

double family_volume(const MetricFamily& family, const Params& theta)
{
    if (family.volume) return family.volume(theta);
    return chart::chart_integrals(family.build(theta)).volume;
}

ParamTrajectory ricci_flow_family(const MetricFamily& family, const Params& theta0, double dt, double t_end,
                                  bool normalized)
{
    if (!(dt > 0.0) || !(t_end > 0.0)) throw Error("dt and t_end must be positive");
    ParamTrajectory traj;
    const double v0 = family_volume(family, theta0);
    const int n = family.build(theta0).dim();
    traj.record(0.0, theta0, v0, 0.0);
    Params theta = theta0;
    double t = 0.0;
    const double t_tol = 1e-12 * t_end;
    auto rate = [&](const Params& th) { return project_ricci(family, th).rate; };
    while (t < t_end - t_tol) {
        const double h = std::min(dt, t_end - t);
        Params next;
        double speed = 0.0;
        try {
            const Params k1 = rate(theta);
            const Params k2 = rate(theta + 0.5 * h * k1);
            const Params k3 = rate(theta + 0.5 * h * k2);
            const Params k4 = rate(theta + h * k3);
            next = theta + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
            speed = k1.cwiseAbs().maxCoeff();
            if (normalized) next *= std::pow(v0 / family_volume(family, next), 2.0 / n);
            if (!family.contains(next)) throw StepRejected("parameters left the family box");
        } catch (const StepRejected& e) {
            traj.step_log.push_back({t, h, false, e.what()});
            traj.stop = StopReason::Degenerate;
            traj.message = e.what();
            return traj;
        }
        traj.step_log.push_back({t, h, true, ""});
        t = (t_end - (t + h) <= t_tol) ? t_end : t + h;
        theta = next;
        traj.record(t, theta, family_volume(family, theta), speed);
    }
    return traj;
}

} // namespace geolab::flow
