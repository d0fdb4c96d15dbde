#include <geolab/chart/curvature.hpp>
#include <geolab/chart/laplacian.hpp>
#include <geolab/common/error.hpp>

namespace geolab::chart {

Eigen::VectorXd laplace_beltrami(const MetricChart& chart, const VectorField& f, const Vec& x, double h, double metric_h)
{
    const int n = chart.dim();
    if (!chart.box().contains(x, std::max(h, 2 * metric_h))) throw Error("Laplacian stencil leaves the chart");
    const MetricJet jet = analytic_jet(chart, x, metric_h);
    const auto gamma = christoffel(jet);
    auto shifted = [&](int i, double si, int j, double sj) {
        Vec y = x;
        y[i] += si;
        y[j] += sj;
        return f(y);
    };
    const Eigen::VectorXd f0 = f(x);
    std::vector<Eigen::VectorXd> grad(static_cast<size_t>(n));
    Eigen::VectorXd out = Eigen::VectorXd::Zero(f0.size());
    for (int i = 0; i < n; ++i) {
        const Eigen::VectorXd fp = shifted(i, h, i, 0.0), fm = shifted(i, -h, i, 0.0);
        grad[static_cast<size_t>(i)] = (fp - fm) / (2 * h);
        out -= jet.ginv(i, i) * (fp - 2 * f0 + fm) / (h * h);
    }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            if (jet.ginv(i, j) == 0.0) continue;
            const Eigen::VectorXd dij =
                (shifted(i, h, j, h) - shifted(i, h, j, -h) - shifted(i, -h, j, h) + shifted(i, -h, j, -h)) / (4 * h * h);
            out -= 2.0 * jet.ginv(i, j) * dij;
        }
    for (int k = 0; k < n; ++k) {
        double c = 0.0;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) c += jet.ginv(i, j) * gamma[static_cast<size_t>(k)](i, j);
        out += c * grad[static_cast<size_t>(k)];
    }
    return out;
}

} // namespace geolab::chart
