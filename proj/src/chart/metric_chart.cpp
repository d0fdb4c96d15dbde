#include <geolab/chart/metric_chart.hpp>
#include <geolab/common/error.hpp>

#include <Eigen/Cholesky>
#include <fmt/core.h>

#include <cmath>

namespace geolab::chart {

bool Box::contains(const Vec& x, double margin) const
{
    for (int a = 0; a < dim(); ++a) {
        if (periodic(a)) continue;
        if (x[a] < lo[a] + margin || x[a] > hi[a] - margin) return false;
    }
    return true;
}

MetricChart::MetricChart(std::string name, Box box, MetricFn metric, Cover cover)
    : name_(std::move(name)), box_(std::move(box)), metric_(std::move(metric)), cover_(cover)
{
    if (box_.hi.size() != box_.lo.size()) throw Error("chart box corners differ in dimension");
    if (box_.dim() < 1 || box_.dim() > kMaxDim) throw Error("chart dimension out of range");
    if (!box_.period.empty() && static_cast<int>(box_.period.size()) != box_.dim())
        throw Error("chart period list has the wrong length");
}

Mat MetricChart::checked_metric(const Vec& x) const
{
    Mat g = metric_(x);
    const double scale = g.cwiseAbs().maxCoeff();
    if (!g.allFinite() || (g - g.transpose()).cwiseAbs().maxCoeff() > 1e-12 * scale)
        throw NotPositiveDefinite(fmt::format("metric of chart '{}' is not symmetric", name_));
    Eigen::LLT<Mat> llt(g);
    if (llt.info() != Eigen::Success || scale <= 0.0)
        throw NotPositiveDefinite(fmt::format("metric of chart '{}' is not positive definite", name_));
    return g;
}

std::vector<Mat> MetricChart::metric_derivative(const Vec& x) const
{
    if (!derivative_) throw Error("chart has no analytic metric derivative");
    return derivative_(x);
}

Mat MetricChart::complex_structure(const Vec& x) const
{
    if (!J_) throw Rejected(fmt::format("chart '{}' has no almost-complex structure", name_));
    return J_(x);
}

MetricChart& MetricChart::with_derivative(MetricDerivativeFn fn)
{
    derivative_ = std::move(fn);
    return *this;
}

std::vector<std::vector<Mat>> MetricChart::metric_hessian(const Vec& x) const
{
    if (!hessian_) throw Error("chart has no analytic metric hessian");
    return hessian_(x);
}

MetricChart& MetricChart::with_hessian(MetricHessianFn fn)
{
    hessian_ = std::move(fn);
    return *this;
}

MetricChart MetricChart::without_derivatives() const
{
    MetricChart out = *this;
    out.derivative_ = {};
    out.hessian_ = {};
    return out;
}

MetricChart& MetricChart::with_complex_structure(ComplexStructureFn fn)
{
    J_ = std::move(fn);
    return *this;
}

MetricChart& MetricChart::with_integration_box(Box box)
{
    integration_box_ = std::move(box);
    return *this;
}

MetricChart MetricChart::scaled(double c) const
{
    if (!(c > 0.0)) throw Error("metric scale must be positive");
    MetricChart out(name_, box_, [m = metric_, c](const Vec& x) -> Mat { return c * m(x); }, cover_);
    if (derivative_) {
        out.derivative_ = [d = derivative_, c](const Vec& x) {
            auto dg = d(x);
            for (auto& m : dg) m *= c;
            return dg;
        };
    }
    if (hessian_) {
        out.hessian_ = [d = hessian_, c](const Vec& x) {
            auto ddg = d(x);
            for (auto& row : ddg)
                for (auto& m : row) m *= c;
            return ddg;
        };
    }
    out.J_ = J_;
    out.integration_box_ = integration_box_;
    return out;
}

double kahler_compat_check(const MetricChart& chart, const std::vector<Vec>& samples)
{
    double worst = 0.0;
    for (const Vec& x : samples) {
        const Mat J = chart.complex_structure(x);
        const Mat g = chart.checked_metric(x);
        const int n = chart.dim();
        if ((J * J + Mat::Identity(n, n)).cwiseAbs().maxCoeff() > 1e-10)
            throw Rejected(fmt::format("J^2 != -1 on chart '{}'", chart.name()));
        // Columns of J are J e_i, so entry (i, j) of J^T g J is g(J e_i, J e_j).
        worst = std::max(worst, (J.transpose() * g * J - g).cwiseAbs().maxCoeff());
    }
    return worst;
}

} // namespace geolab::chart
