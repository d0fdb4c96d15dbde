#include <geolab/chart/curvature.hpp>
#include <geolab/common/error.hpp>

#include <Eigen/LU>
#include <fmt/core.h>

#include <algorithm>
#include <cmath>

namespace geolab::chart {

double Tensor4::max_abs() const
{
    double m = 0.0;
    for (double v : data_) m = std::max(m, std::abs(v));
    return m;
}

MetricJet metric_jet(const MetricChart& chart, const Vec& x, double h)
{
    const int n = chart.dim();
    MetricJet jet;
    jet.g = chart.checked_metric(x);
    jet.ginv = jet.g.inverse();
    jet.dg.assign(n, Mat::Zero(n, n));
    jet.ddg.assign(n, std::vector<Mat>(n, Mat::Zero(n, n)));
    auto shifted = [&](int a, double sa, int b = -1, double sb = 0.0) {
        Vec y = x;
        y[a] += sa;
        if (b >= 0) y[b] += sb;
        return y;
    };
    const double h2 = h * h;
    for (int a = 0; a < n; ++a) {
        const Mat gp = chart.metric(shifted(a, h));
        const Mat gm = chart.metric(shifted(a, -h));
        jet.dg[a] = (gp - gm) / (2.0 * h);
        jet.ddg[a][a] = (gp - 2.0 * jet.g + gm) / h2;
    }
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            const Mat d = (chart.metric(shifted(a, h, b, h)) - chart.metric(shifted(a, h, b, -h)) -
                           chart.metric(shifted(a, -h, b, h)) + chart.metric(shifted(a, -h, b, -h))) /
                          (4.0 * h2);
            jet.ddg[a][b] = d;
            jet.ddg[b][a] = d;
        }
    return jet;
}

MetricJet richardson_jet(const MetricChart& chart, const Vec& x, double h)
{
    MetricJet coarse = metric_jet(chart, x, h);
    const MetricJet fine = metric_jet(chart, x, h / 2);
    const int n = chart.dim();
    for (int a = 0; a < n; ++a) {
        coarse.dg[a] = (4.0 * fine.dg[a] - coarse.dg[a]) / 3.0;
        for (int b = 0; b < n; ++b) coarse.ddg[a][b] = (4.0 * fine.ddg[a][b] - coarse.ddg[a][b]) / 3.0;
    }
    return coarse;
}

MetricJet analytic_jet(const MetricChart& chart, const Vec& x, double h)
{
    if (!chart.has_derivative()) return metric_jet(chart, x, h);
    const int n = chart.dim();
    MetricJet jet;
    jet.g = chart.checked_metric(x);
    jet.ginv = jet.g.inverse();
    jet.dg = chart.metric_derivative(x);
    if (chart.has_hessian()) {
        jet.ddg = chart.metric_hessian(x);
        return jet;
    }
    jet.ddg.assign(n, std::vector<Mat>(n, Mat::Zero(n, n)));
    for (int a = 0; a < n; ++a) {
        Vec xp = x, xm = x;
        xp[a] += h;
        xm[a] -= h;
        const auto plus = chart.metric_derivative(xp);
        const auto minus = chart.metric_derivative(xm);
        for (int b = 0; b < n; ++b) jet.ddg[a][b] = (plus[b] - minus[b]) / (2.0 * h);
    }
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            const Mat sym = 0.5 * (jet.ddg[a][b] + jet.ddg[b][a]);
            jet.ddg[a][b] = sym;
            jet.ddg[b][a] = sym;
        }
    return jet;
}

namespace {

// Christoffel symbols of the first kind: first[l](i, j) = Gamma_{l,ij}.
std::vector<Mat> first_kind(const std::vector<Mat>& dg, int n)
{
    std::vector<Mat> out(n, Mat::Zero(n, n));
    for (int l = 0; l < n; ++l)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) out[l](i, j) = 0.5 * (dg[i](j, l) + dg[j](i, l) - dg[l](i, j));
    return out;
}

std::vector<Mat> raise(const std::vector<Mat>& first, const Mat& ginv)
{
    const int n = static_cast<int>(first.size());
    std::vector<Mat> out(n, Mat::Zero(n, n));
    for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) out[k] += ginv(k, l) * first[l];
    return out;
}

// Raise every index of a rank-r tensor stored row-major with dimension n.
std::vector<double> raise_all(std::vector<double> t, const Mat& ginv, int rank)
{
    const int n = static_cast<int>(ginv.rows());
    std::vector<double> tmp(t.size());
    size_t stride = 1;
    for (int s = 0; s < rank; ++s) stride *= n;
    for (int slot = 0; slot < rank; ++slot) {
        stride /= n;
        const size_t block = stride * n;
        for (size_t base = 0; base < t.size(); base += block)
            for (size_t rest = 0; rest < stride; ++rest)
                for (int a = 0; a < n; ++a) {
                    double acc = 0.0;
                    for (int b = 0; b < n; ++b) acc += ginv(a, b) * t[base + b * stride + rest];
                    tmp[base + a * stride + rest] = acc;
                }
        t.swap(tmp);
    }
    return t;
}

double contract_with_raised(const std::vector<double>& lower, const Mat& ginv, int rank)
{
    const auto upper = raise_all(lower, ginv, rank);
    double s = 0.0;
    for (size_t i = 0; i < lower.size(); ++i) s += lower[i] * upper[i];
    return s;
}

std::vector<double> flatten(const Tensor4& T)
{
    const int n = T.dim();
    std::vector<double> out;
    out.reserve(static_cast<size_t>(n) * n * n * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                for (int l = 0; l < n; ++l) out.push_back(T(i, j, k, l));
    return out;
}

} // namespace

std::vector<Mat> christoffel(const MetricJet& jet)
{
    return raise(first_kind(jet.dg, static_cast<int>(jet.g.rows())), jet.ginv);
}

std::vector<std::vector<Mat>> christoffel_derivative(const MetricJet& jet)
{
    const int n = static_cast<int>(jet.g.rows());
    const auto first = first_kind(jet.dg, n);
    std::vector<std::vector<Mat>> out(n);
    for (int a = 0; a < n; ++a) {
        const Mat dginv = -jet.ginv * jet.dg[a] * jet.ginv;
        std::vector<Mat> dfirst(n, Mat::Zero(n, n));
        for (int l = 0; l < n; ++l)
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    dfirst[l](i, j) = 0.5 * (jet.ddg[a][i](j, l) + jet.ddg[a][j](i, l) - jet.ddg[a][l](i, j));
        out[a] = raise(first, dginv);
        const auto second = raise(dfirst, jet.ginv);
        for (int k = 0; k < n; ++k) out[a][k] += second[k];
    }
    return out;
}

double full_norm2(const Tensor4& T, const Mat& ginv)
{
    // As an n^2 x n^2 matrix over index pairs, raising is K T K with K = ginv (x) ginv.
    const int n = T.dim();
    const int nn = n * n;
    Eigen::MatrixXd K(nn, nn), M(nn, nn);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                for (int l = 0; l < n; ++l) {
                    K(i * n + j, k * n + l) = ginv(i, k) * ginv(j, l);
                    M(i * n + j, k * n + l) = T(i, j, k, l);
                }
    return M.cwiseProduct(K * M * K).sum();
}

double CurvaturePack::sectional(const Vec& X, const Vec& Y) const
{
    const int n = static_cast<int>(g.rows());
    double num = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                for (int l = 0; l < n; ++l) num += Rm(i, j, k, l) * X[i] * Y[j] * Y[k] * X[l];
    const double xx = X.dot(g * X), yy = Y.dot(g * Y), xy = X.dot(g * Y);
    return num / (xx * yy - xy * xy);
}

CurvaturePack curvature_from_jet(const MetricJet& jet)
{
    const int n = static_cast<int>(jet.g.rows());
    CurvaturePack pack;
    pack.g = jet.g;
    pack.ginv = jet.ginv;
    pack.gamma = christoffel(jet);
    const auto dgamma = christoffel_derivative(jet);
    const auto& G = pack.gamma;

    // R_ijk^m first, then lower m.
    Tensor4 up(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                for (int m = 0; m < n; ++m) {
                    double v = dgamma[i][m](j, k) - dgamma[j][m](i, k);
                    for (int p = 0; p < n; ++p) v += G[m](i, p) * G[p](j, k) - G[m](j, p) * G[p](i, k);
                    up(i, j, k, m) = v;
                }
    pack.Rm = Tensor4(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                for (int l = 0; l < n; ++l) {
                    double v = 0.0;
                    for (int m = 0; m < n; ++m) v += jet.g(l, m) * up(i, j, k, m);
                    pack.Rm(i, j, k, l) = v;
                }

    pack.Ric = Mat::Zero(n, n);
    for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) {
            double v = 0.0;
            for (int i = 0; i < n; ++i) v += up(i, j, k, i);
            pack.Ric(j, k) = v;
        }
    pack.Ric = 0.5 * (pack.Ric + pack.Ric.transpose()).eval();
    pack.R = (jet.ginv.cwiseProduct(pack.Ric)).sum();
    pack.rm_norm2 = full_norm2(pack.Rm, jet.ginv);

    const double scale = 1.0 + pack.Rm.max_abs();
    double bianchi = 0.0, sym = 0.0;
    const auto& R = pack.Rm;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                for (int l = 0; l < n; ++l) {
                    bianchi = std::max(bianchi, std::abs(R(i, j, k, l) + R(j, k, i, l) + R(k, i, j, l)));
                    sym = std::max({sym, std::abs(R(i, j, k, l) + R(j, i, k, l)),
                                    std::abs(R(i, j, k, l) + R(i, j, l, k)),
                                    std::abs(R(i, j, k, l) - R(k, l, i, j))});
                }
    pack.bianchi_residual = bianchi / scale;
    pack.symmetry_residual = sym / scale;
    return pack;
}

namespace {

void require_margin(const MetricChart& chart, const Vec& x, double margin)
{
    if (x.size() != chart.dim()) throw Error("point dimension does not match the chart");
    if (!chart.box().contains(x, margin))
        throw Error(fmt::format("point is closer than {} to the boundary of chart '{}'", margin, chart.name()));
}

} // namespace

CurvaturePack curvature_at(const MetricChart& chart, const Vec& x, double h)
{
    require_margin(chart, x, 2.0 * h);
    CurvaturePack pack = curvature_from_jet(richardson_jet(chart, x, h));
    if (pack.bianchi_residual > kBianchiTolerance || pack.symmetry_residual > kBianchiTolerance)
        throw BianchiFailure(fmt::format("curvature of chart '{}' fails its symmetries (Bianchi {:.3g}, pairs {:.3g})",
                                         chart.name(), pack.bianchi_residual, pack.symmetry_residual));
    return pack;
}

EinsteinResidual einstein_residual(const MetricChart& chart, const Vec& x, double h)
{
    const auto pack = curvature_at(chart, x, h);
    EinsteinResidual out;
    out.lambda = pack.R / chart.dim();
    out.residual = (pack.Ric - out.lambda * pack.g).cwiseAbs().maxCoeff();
    out.normalized = out.residual / pack.g.cwiseAbs().maxCoeff();
    return out;
}

double nabla_rm_norm(const MetricChart& chart, const Vec& x, double h)
{
    require_margin(chart, x, 3.0 * h);
    const int n = chart.dim();
    const auto centre = curvature_at(chart, x, h);
    const auto& G = centre.gamma;
    const auto& R = centre.Rm;
    const size_t n4 = static_cast<size_t>(n) * n * n * n;
    std::vector<double> nabla(n * n4, 0.0);
    for (int a = 0; a < n; ++a) {
        Vec xp = x, xm = x;
        xp[a] += h;
        xm[a] -= h;
        const auto plus = curvature_at(chart, xp, h);
        const auto minus = curvature_at(chart, xm, h);
        size_t idx = a * n4;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                for (int k = 0; k < n; ++k)
                    for (int l = 0; l < n; ++l, ++idx) {
                        double v = (plus.Rm(i, j, k, l) - minus.Rm(i, j, k, l)) / (2.0 * h);
                        for (int m = 0; m < n; ++m) {
                            v -= G[m](a, i) * R(m, j, k, l) + G[m](a, j) * R(i, m, k, l) +
                                 G[m](a, k) * R(i, j, m, l) + G[m](a, l) * R(i, j, k, m);
                        }
                        nabla[idx] = v;
                    }
    }
    return std::sqrt(std::max(0.0, contract_with_raised(nabla, centre.ginv, 5)));
}

} // namespace geolab::chart
