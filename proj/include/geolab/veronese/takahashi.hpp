#pragma once

#include <geolab/veronese/immersion.hpp>

#include <functional>
#include <string>
#include <vector>

namespace geolab::veronese {

/// x is read as an isometric immersion of (M, ratio g); its Laplacian is
/// Δ_g / ratio, hence lambda_induced.
struct TakahashiReport {
    double lambda_fit = 0.0;      // least squares Δx = λx
    double residual = 0.0;        // |Δx − λx| / |λx| over all samples
    double normal_residual = 0.0; // component of Δx orthogonal to x, relative to |Δx|
    double ratio = 0.0;           // pullback ratio
    double ratio_cv = 0.0;
    double lambda_induced = 0.0;  // lambda_fit / ratio
    double radius_expected = 0.0; // sqrt(m / lambda_induced)
    double radius = 0.0;          // mean |x|, the sphere the immersion lies on
    double radius_check = 0.0;    // |radius_expected − radius|
    int samples = 0;
};

/// Throws IllConditioned when the samples of x are numerically zero.
TakahashiReport takahashi_certify(const Immersion& x, const chart::MetricChart& chart,
                                  const std::vector<chart::Vec>& samples);

using ScalarFn = std::function<double(const chart::Vec&)>;

struct Eigenmap {
    std::vector<ScalarFn> basis;
    double lambda = 0.0;
    double scale = 1.0; // multiplies (f_1..f_n) into an isometric immersion
    Eigen::VectorXd operator()(const chart::Vec& x) const;
};

/// Each basis function must satisfy Δf = λf with one common λ ≠ 0 (relative
/// fit residual below tol), and the pullback must be a constant multiple of g
/// (coefficient of variation below tol). Throws Rejected otherwise.
Eigenmap eigenmap(const std::vector<ScalarFn>& basis, const chart::MetricChart& chart,
                  const std::vector<chart::Vec>& samples, double tol = 1e-5);

struct SpanRank {
    int rank = 0;
    std::vector<double> singular_values; // descending
    double gap = 0.0;                    // sigma_rank / sigma_{rank+1} (inf when full)
};

/// Numerical rank (relative tolerance 1e-8) of the real span of
/// [Re lift, Im lift] over random points.
SpanRank span_rank_probe(int samples, uint64_t seed);

/// Same for the 9 real coordinates of z z*/|z|^2. With affine true, the
/// centroid is subtracted first (dimension of the affine span).
SpanRank projector_span_rank(int samples, uint64_t seed, bool affine);

struct Check {
    std::string name;
    double value = 0.0;
    double expected = 0.0;
    double tolerance = 0.0;
    bool pass() const;
};

/// check,value,expected,tolerance,pass
std::string certification_csv(const std::vector<Check>& checks);

} // namespace geolab::veronese
