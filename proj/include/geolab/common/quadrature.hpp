#pragma once

#include <Eigen/Core>

#include <vector>

namespace geolab {

struct QuadratureRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

/// Gauss-Legendre rule with n nodes on [a, b] (Golub-Welsch).
QuadratureRule gauss_legendre(int n, double a = -1.0, double b = 1.0);

struct SphereNode {
    Eigen::Vector4d direction;
    double weight;
};

/// Product rule on the unit 3-sphere in Hopf coordinates
/// (cos(eta) e^{i xi1}, sin(eta) e^{i xi2}). Gauss-Legendre in sin^2(eta),
/// trapezoid in both angles. Weights sum to 2 pi^2.
std::vector<SphereNode> s3_product_rule(int n_eta, int n_angle);

} // namespace geolab
