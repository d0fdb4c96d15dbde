#pragma once

#include <geolab/chart/metric_chart.hpp>

#include <vector>

namespace geolab::chart {

/// Dense rank-4 array over {0..n-1}^4.
class Tensor4 {
public:
    Tensor4() = default;
    explicit Tensor4(int n) : n_(n), data_(static_cast<size_t>(n) * n * n * n, 0.0) {}

    int dim() const { return n_; }
    double& operator()(int i, int j, int k, int l) { return data_[idx(i, j, k, l)]; }
    double operator()(int i, int j, int k, int l) const { return data_[idx(i, j, k, l)]; }
    double max_abs() const;

private:
    size_t idx(int i, int j, int k, int l) const { return ((static_cast<size_t>(i) * n_ + j) * n_ + k) * n_ + l; }
    int n_ = 0;
    std::vector<double> data_;
};

/// Metric with first and second partials at a point.
struct MetricJet {
    Mat g;
    Mat ginv;
    std::vector<Mat> dg;                // dg[a] = d_a g
    std::vector<std::vector<Mat>> ddg;  // ddg[a][b] = d_a d_b g
};

/// Central differences of the metric with step h (pure and mixed
/// second-order stencils). Analytic derivatives are ignored.
MetricJet metric_jet(const MetricChart& chart, const Vec& x, double h);
/// Richardson combination (4 D(h/2) - D(h)) / 3 of two difference jets.
MetricJet richardson_jet(const MetricChart& chart, const Vec& x, double h);
/// Analytic derivatives where the chart provides them; a missing hessian is
/// differenced from the first derivatives, a missing first derivative falls
/// back to metric_jet.
MetricJet analytic_jet(const MetricChart& chart, const Vec& x, double h);

/// gamma[k](i, j) = Gamma^k_ij.
std::vector<Mat> christoffel(const MetricJet& jet);
/// dgamma[a][k](i, j) = d_a Gamma^k_ij.
std::vector<std::vector<Mat>> christoffel_derivative(const MetricJet& jet);

/// R_ijkl = g(R(d_i, d_j) d_k, d_l), R(X,Y) = [nabla_X, nabla_Y] - nabla_[X,Y],
/// so the sectional curvature is R(X,Y,Y,X) / |X ^ Y|^2 and Ric_jk = g^il R_ijkl.
struct CurvaturePack {
    std::vector<Mat> gamma;
    Tensor4 Rm;
    Mat Ric;
    double R = 0.0;
    double rm_norm2 = 0.0;
    double bianchi_residual = 0.0;  // max cyclic sum, relative to 1 + max|Rm|
    double symmetry_residual = 0.0; // max antisymmetry / pair-symmetry defect, same scale
    Mat g;
    Mat ginv;

    double sectional(const Vec& X, const Vec& Y) const;
};

CurvaturePack curvature_from_jet(const MetricJet& jet);

constexpr double kDefaultStep = 1e-3;
constexpr double kBianchiTolerance = 1e-6;

/// Curvature by central differences of the metric with Richardson
/// extrapolation (step h and h/2). Throws Error when x is closer than 2h to
/// a non-periodic face, NotPositiveDefinite on a bad metric and BianchiFailure
/// when the symmetry or first-Bianchi defect exceeds kBianchiTolerance.
CurvaturePack curvature_at(const MetricChart& chart, const Vec& x, double h = kDefaultStep);

struct EinsteinResidual {
    double lambda = 0.0;     // R / n
    double residual = 0.0;   // max |Ric - lambda g|
    double normalized = 0.0; // residual / max |g|
};

EinsteinResidual einstein_residual(const MetricChart& chart, const Vec& x, double h = kDefaultStep);

/// Full norm of nabla Rm, differencing curvature packs at x +- h e_a.
double nabla_rm_norm(const MetricChart& chart, const Vec& x, double h = kDefaultStep);

/// |T|^2 with every index raised by ginv.
double full_norm2(const Tensor4& T, const Mat& ginv);

} // namespace geolab::chart
