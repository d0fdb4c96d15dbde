#include <geolab/chart/catalog.hpp>
#include <geolab/common/error.hpp>

#include <fmt/core.h>

#include <cmath>
#include <complex>
#include <numbers>

namespace geolab::chart {

namespace {

constexpr double kPi = std::numbers::pi;

Box cube(int n, double lo, double hi)
{
    return Box{Vec::Constant(n, lo), Vec::Constant(n, hi), {}};
}

struct ConformalFactor {
    double f; // g = f * delta
    Vec grad;
    Mat hess;
};

std::vector<std::vector<Mat>> zero_hessian(int n)
{
    return std::vector<std::vector<Mat>>(n, std::vector<Mat>(n, Mat::Zero(n, n)));
}

// Chart for f(x) * delta with analytic first derivatives.
MetricChart conformal(std::string name, Box box, std::function<ConformalFactor(const Vec&)> factor,
                      Cover cover = Cover::Box)
{
    const int n = box.dim();
    MetricChart chart(std::move(name), std::move(box),
                      [factor, n](const Vec& x) -> Mat { return factor(x).f * Mat::Identity(n, n); }, cover);
    chart.with_derivative([factor, n](const Vec& x) {
        const auto cf = factor(x);
        std::vector<Mat> dg(n);
        for (int a = 0; a < n; ++a) dg[a] = cf.grad[a] * Mat::Identity(n, n);
        return dg;
    });
    chart.with_hessian([factor, n](const Vec& x) {
        const auto cf = factor(x);
        auto ddg = zero_hessian(n);
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) ddg[a][b] = cf.hess(a, b) * Mat::Identity(n, n);
        return ddg;
    });
    return chart;
}

} // namespace

Mat standard_complex_structure(int n)
{
    if (n % 2 != 0) throw Error("complex structure needs an even dimension");
    Mat J = Mat::Zero(n, n);
    for (int k = 0; k < n / 2; ++k) {
        J(2 * k + 1, 2 * k) = 1.0;
        J(2 * k, 2 * k + 1) = -1.0;
    }
    return J;
}

MetricChart flat_chart(int n, double half)
{
    MetricChart chart("flat", cube(n, -half, half), [n](const Vec&) -> Mat { return Mat::Identity(n, n); });
    chart.with_derivative([n](const Vec&) { return std::vector<Mat>(n, Mat::Zero(n, n)); });
    chart.with_hessian([n](const Vec&) { return zero_hessian(n); });
    if (n % 2 == 0) chart.with_complex_structure([n](const Vec&) { return standard_complex_structure(n); });
    return chart;
}

MetricChart flat_torus_chart(int n, double period)
{
    Box box = cube(n, 0.0, period);
    box.period.assign(n, period);
    MetricChart chart("flat_torus", box, [n](const Vec&) -> Mat { return Mat::Identity(n, n); });
    chart.with_derivative([n](const Vec&) { return std::vector<Mat>(n, Mat::Zero(n, n)); });
    chart.with_hessian([n](const Vec&) { return zero_hessian(n); });
    if (n % 2 == 0) chart.with_complex_structure([n](const Vec&) { return standard_complex_structure(n); });
    return chart;
}

MetricChart constant_chart(const Mat& g, std::string name)
{
    const int n = static_cast<int>(g.rows());
    MetricChart chart(std::move(name), cube(n, -1.0, 1.0), [g](const Vec&) -> Mat { return g; });
    chart.with_derivative([n](const Vec&) { return std::vector<Mat>(n, Mat::Zero(n, n)); });
    chart.with_hessian([n](const Vec&) { return zero_hessian(n); });
    if (n % 2 == 0) chart.with_complex_structure([n](const Vec&) { return standard_complex_structure(n); });
    return chart;
}

MetricChart s4_chart()
{
    return conformal("s4", cube(4, -50.0, 50.0),
                     [](const Vec& x) {
                         const double q = 1.0 + x.squaredNorm();
                         const double q3 = q * q * q;
                         const Mat hess = (-16.0 / q3) * Mat::Identity(4, 4) + (96.0 / (q3 * q)) * x * x.transpose();
                         return ConformalFactor{4.0 / (q * q), (-16.0 / q3) * x, hess};
                     },
                     Cover::Radial);
}

namespace {

using cplx = std::complex<double>;

// Real 4x4 form of a 2x2 complex matrix K with g(X, Y) = Re(Y^* K X),
// coordinates ordered (Re z1, Im z1, Re z2, Im z2).
Mat realify(const cplx K[2][2])
{
    Mat g(4, 4);
    for (int k = 0; k < 2; ++k)
        for (int j = 0; j < 2; ++j) {
            g(2 * k, 2 * j) = K[k][j].real();
            g(2 * k, 2 * j + 1) = -K[k][j].imag();
            g(2 * k + 1, 2 * j) = K[k][j].imag();
            g(2 * k + 1, 2 * j + 1) = K[k][j].real();
        }
    return g;
}

// d z_k / d x_a.
cplx dz(int k, int a)
{
    if (a == 2 * k) return {1.0, 0.0};
    if (a == 2 * k + 1) return {0.0, 1.0};
    return {0.0, 0.0};
}

// K_kj = delta_kj / q - z_k conj(z_j) / q^2 with q = 1 + |z|^2, the conjugate of
// the Kahler matrix of log(1 + |z|^2).
struct FubiniStudy {
    cplx z[2];
    double q;
    explicit FubiniStudy(const Vec& x) : z{{x[0], x[1]}, {x[2], x[3]}}, q(1.0 + x.squaredNorm()) {}

    Mat metric() const
    {
        cplx K[2][2];
        for (int k = 0; k < 2; ++k)
            for (int j = 0; j < 2; ++j)
                // The diagonal numerator q - |z_k|^2 = 1 + |z_other|^2 avoids cancellation.
                K[k][j] = (k == j) ? cplx((1.0 + std::norm(z[1 - k])) / (q * q), 0.0) : -z[k] * std::conj(z[j]) / (q * q);
        return realify(K);
    }

    std::vector<Mat> first(const Vec& x) const
    {
        std::vector<Mat> out;
        for (int a = 0; a < 4; ++a) {
            const double qa = 2.0 * x[a];
            const double f1a = -qa / (q * q), f2a = -2.0 * qa / (q * q * q);
            cplx K[2][2];
            for (int k = 0; k < 2; ++k)
                for (int j = 0; j < 2; ++j) {
                    const cplx w = z[k] * std::conj(z[j]);
                    const cplx wa = dz(k, a) * std::conj(z[j]) + z[k] * std::conj(dz(j, a));
                    K[k][j] = (k == j ? f1a : 0.0) - (wa / (q * q) + w * f2a);
                }
            out.push_back(realify(K));
        }
        return out;
    }

    std::vector<std::vector<Mat>> second(const Vec& x) const
    {
        std::vector<std::vector<Mat>> out(4, std::vector<Mat>(4));
        const double q2 = q * q, q3 = q2 * q, q4 = q3 * q;
        for (int a = 0; a < 4; ++a)
            for (int b = 0; b < 4; ++b) {
                const double qa = 2.0 * x[a], qb = 2.0 * x[b], qab = (a == b) ? 2.0 : 0.0;
                const double f1ab = -qab / q2 + 2.0 * qa * qb / q3;
                const double f2a = -2.0 * qa / q3, f2b = -2.0 * qb / q3;
                const double f2ab = -2.0 * qab / q3 + 6.0 * qa * qb / q4;
                cplx K[2][2];
                for (int k = 0; k < 2; ++k)
                    for (int j = 0; j < 2; ++j) {
                        const cplx w = z[k] * std::conj(z[j]);
                        const cplx wa = dz(k, a) * std::conj(z[j]) + z[k] * std::conj(dz(j, a));
                        const cplx wb = dz(k, b) * std::conj(z[j]) + z[k] * std::conj(dz(j, b));
                        const cplx wab = dz(k, a) * std::conj(dz(j, b)) + dz(k, b) * std::conj(dz(j, a));
                        K[k][j] = (k == j ? f1ab : 0.0) - (wab / q2 + wa * f2b + wb * f2a + w * f2ab);
                    }
                out[a][b] = realify(K);
            }
        return out;
    }
};

} // namespace

MetricChart fubini_study_chart()
{
    MetricChart chart(
        "fubini_study", cube(4, -50.0, 50.0), [](const Vec& x) -> Mat { return FubiniStudy(x).metric(); },
        Cover::Radial);
    chart.with_derivative([](const Vec& x) { return FubiniStudy(x).first(x); });
    chart.with_hessian([](const Vec& x) { return FubiniStudy(x).second(x); });
    chart.with_complex_structure([](const Vec&) { return standard_complex_structure(4); });
    return chart;
}

MetricChart s2xs2_chart(double a, double b)
{
    Box box{Vec::Zero(4), Vec(4), {0.0, 2 * kPi, 0.0, 2 * kPi}};
    box.hi << kPi, 2 * kPi, kPi, 2 * kPi;
    MetricChart chart("s2xs2", box, [a, b](const Vec& x) -> Mat {
        Mat g = Mat::Zero(4, 4);
        g(0, 0) = a;
        g(1, 1) = a * std::sin(x[0]) * std::sin(x[0]);
        g(2, 2) = b;
        g(3, 3) = b * std::sin(x[2]) * std::sin(x[2]);
        return g;
    });
    chart.with_derivative([a, b](const Vec& x) {
        std::vector<Mat> dg(4, Mat::Zero(4, 4));
        dg[0](1, 1) = a * std::sin(2 * x[0]);
        dg[2](3, 3) = b * std::sin(2 * x[2]);
        return dg;
    });
    chart.with_hessian([a, b](const Vec& x) {
        auto ddg = zero_hessian(4);
        ddg[0][0](1, 1) = 2 * a * std::cos(2 * x[0]);
        ddg[2][2](3, 3) = 2 * b * std::cos(2 * x[2]);
        return ddg;
    });
    chart.with_complex_structure([](const Vec& x) {
        Mat J = Mat::Zero(4, 4);
        for (int k = 0; k < 2; ++k) {
            const double s = std::sin(x[2 * k]);
            J(2 * k, 2 * k + 1) = -s;
            J(2 * k + 1, 2 * k) = 1.0 / s;
        }
        return J;
    });
    return chart;
}

MetricChart hyperbolic_chart()
{
    Box box{Vec(4), Vec(4), {}};
    box.lo << -6.0, -6.0, -6.0, 0.02;
    box.hi << 6.0, 6.0, 6.0, 30.0;
    auto chart = conformal("hyperbolic", box, [](const Vec& x) {
        const double t = x[3];
        Vec grad = Vec::Zero(4);
        grad[3] = -2.0 / (t * t * t);
        Mat hess = Mat::Zero(4, 4);
        hess(3, 3) = 6.0 / (t * t * t * t);
        return ConformalFactor{1.0 / (t * t), grad, hess};
    });
    // The model has infinite volume; functionals are taken over a unit slab.
    Box slab{Vec(4), Vec(4), {}};
    slab.lo << -1.0, -1.0, -1.0, 0.5;
    slab.hi << 1.0, 1.0, 1.0, 2.0;
    chart.with_integration_box(slab);
    return chart;
}

MetricChart perturbed_chart()
{
    MetricChart chart("perturbed", cube(4, -2.0, 2.0), [](const Vec& x) -> Mat {
        Mat g = Mat::Identity(4, 4);
        g(1, 1) += 0.1 * x[0] * x[0];
        return g;
    });
    chart.with_derivative([](const Vec& x) {
        std::vector<Mat> dg(4, Mat::Zero(4, 4));
        dg[0](1, 1) = 0.2 * x[0];
        return dg;
    });
    chart.with_hessian([](const Vec&) {
        auto ddg = zero_hessian(4);
        ddg[0][0](1, 1) = 0.2;
        return ddg;
    });
    return chart;
}

MetricChart bump_chart()
{
    auto chart = conformal("bump", cube(4, -3.0, 3.0), [](const Vec& x) {
        const double phi = 0.5 * std::exp(-x.squaredNorm());
        const double f = std::exp(2.0 * phi);
        const Vec dphi = -2.0 * phi * x;
        const Mat ddphi = -2.0 * phi * Mat::Identity(4, 4) + 4.0 * phi * x * x.transpose();
        return ConformalFactor{f, 2.0 * f * dphi, 2.0 * f * (ddphi + 2.0 * dphi * dphi.transpose())};
    });
    chart.with_integration_box(cube(4, -2.0, 2.0));
    return chart;
}

MetricChart s2_chart()
{
    Box box{Vec(2), Vec(2), {0.0, 2 * kPi}};
    box.lo << 0.0, 0.0;
    box.hi << kPi, 2 * kPi;
    MetricChart chart("s2", box, [](const Vec& x) -> Mat {
        Mat g = Mat::Identity(2, 2);
        g(1, 1) = std::sin(x[0]) * std::sin(x[0]);
        return g;
    });
    chart.with_derivative([](const Vec& x) {
        std::vector<Mat> dg(2, Mat::Zero(2, 2));
        dg[0](1, 1) = std::sin(2 * x[0]);
        return dg;
    });
    chart.with_hessian([](const Vec& x) {
        auto ddg = zero_hessian(2);
        ddg[0][0](1, 1) = 2 * std::cos(2 * x[0]);
        return ddg;
    });
    return chart;
}

std::vector<std::string> chart_names()
{
    return {"flat", "flat_torus", "s4", "fubini_study", "s2xs2", "hyperbolic", "perturbed", "bump"};
}

MetricChart chart_by_name(const std::string& name)
{
    if (name == "flat") return flat_chart();
    if (name == "flat_torus") return flat_torus_chart();
    if (name == "s4") return s4_chart();
    if (name == "fubini_study") return fubini_study_chart();
    if (name == "s2xs2") return s2xs2_chart();
    if (name == "hyperbolic") return hyperbolic_chart();
    if (name == "perturbed") return perturbed_chart();
    if (name == "bump") return bump_chart();
    if (name == "s2") return s2_chart();
    throw Error(fmt::format("unknown chart '{}'", name));
}

Vec base_point(const MetricChart& chart)
{
    const int n = chart.dim();
    const std::string& name = chart.name();
    Vec p = Vec::Zero(n);
    if (name == "flat_torus") p.setConstant(0.5);
    if (name == "s2xs2") p << kPi / 2, kPi, kPi / 2, kPi;
    if (name == "hyperbolic") p[3] = 1.0;
    if (name == "perturbed") p << 0.5, 0.2, 0.1, 0.0;
    if (name == "bump") p << 0.5, 0.3, 0.2, 0.1;
    if (name == "s2") p << kPi / 2, kPi;
    return p;
}

} // namespace geolab::chart
