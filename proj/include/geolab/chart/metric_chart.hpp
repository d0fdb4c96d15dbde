#pragma once

#include <Eigen/Core>

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace geolab::chart {

// Chart dimensions are small; fixed capacity keeps tensor algebra off the heap.
constexpr int kMaxDim = 8;
using Vec = Eigen::Matrix<double, Eigen::Dynamic, 1, 0, kMaxDim, 1>;
using Mat = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, 0, kMaxDim, kMaxDim>;

/// Axis-aligned coordinate box. A period > 0 marks an axis as periodic.
struct Box {
    Vec lo;
    Vec hi;
    std::vector<double> period;

    int dim() const { return static_cast<int>(lo.size()); }
    bool periodic(int axis) const { return !period.empty() && period[axis] > 0.0; }
    /// True if x lies inside with the given margin on every non-periodic axis.
    bool contains(const Vec& x, double margin = 0.0) const;
};

/// How einstein_hilbert covers the model. Box uses the chart box; Radial
/// integrates over all of R^n in polar coordinates (stereographic and
/// affine charts that miss only a point or a divisor).
enum class Cover { Box, Radial };

/// Coordinate patch of an n-manifold with a metric evaluator.
class MetricChart {
public:
    using MetricFn = std::function<Mat(const Vec&)>;
    // Returns the n partials d_a g, a = 0..n-1.
    using MetricDerivativeFn = std::function<std::vector<Mat>(const Vec&)>;
    // Returns d_a d_b g as [a][b].
    using MetricHessianFn = std::function<std::vector<std::vector<Mat>>(const Vec&)>;
    using ComplexStructureFn = std::function<Mat(const Vec&)>;

    /// Throws Error for dimensions above kMaxDim.
    MetricChart(std::string name, Box box, MetricFn metric, Cover cover = Cover::Box);

    const std::string& name() const { return name_; }
    int dim() const { return box_.dim(); }
    const Box& box() const { return box_; }
    Cover cover() const { return cover_; }

    Mat metric(const Vec& x) const { return metric_(x); }
    /// Metric with symmetry and positive definiteness checked.
    Mat checked_metric(const Vec& x) const;

    bool has_derivative() const { return static_cast<bool>(derivative_); }
    std::vector<Mat> metric_derivative(const Vec& x) const;
    bool has_hessian() const { return static_cast<bool>(hessian_); }
    std::vector<std::vector<Mat>> metric_hessian(const Vec& x) const;

    bool has_complex_structure() const { return static_cast<bool>(J_); }
    Mat complex_structure(const Vec& x) const;

    MetricChart& with_derivative(MetricDerivativeFn fn);
    MetricChart& with_hessian(MetricHessianFn fn);
    /// Copy that keeps only the metric evaluator (and J).
    MetricChart without_derivatives() const;
    MetricChart& with_complex_structure(ComplexStructureFn fn);
    /// Region integrated by Cover::Box when it differs from the chart box.
    MetricChart& with_integration_box(Box box);
    const Box& integration_box() const { return integration_box_ ? *integration_box_ : box_; }

    /// Same chart with metric c * g.
    MetricChart scaled(double c) const;

private:
    std::string name_;
    Box box_;
    MetricFn metric_;
    Cover cover_;
    MetricDerivativeFn derivative_;
    MetricHessianFn hessian_;
    ComplexStructureFn J_;
    std::optional<Box> integration_box_;
};

/// Max over samples and coordinate frame pairs of |g(JX,JY) - g(X,Y)|.
/// Throws Rejected if J is absent or J^2 != -I at a sample.
double kahler_compat_check(const MetricChart& chart, const std::vector<Vec>& samples);

} // namespace geolab::chart
