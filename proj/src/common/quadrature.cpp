#include <geolab/common/quadrature.hpp>

#include <Eigen/Eigenvalues>

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace geolab {

QuadratureRule gauss_legendre(int n, double a, double b)
{
    if (n < 1) throw std::invalid_argument("gauss_legendre: n must be positive");
    // Jacobi matrix of the Legendre recurrence; nodes are its eigenvalues.
    Eigen::MatrixXd J = Eigen::MatrixXd::Zero(n, n);
    for (int k = 1; k < n; ++k) {
        const double beta = k / std::sqrt(4.0 * k * k - 1.0);
        J(k, k - 1) = beta;
        J(k - 1, k) = beta;
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(J);
    QuadratureRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    const double half = 0.5 * (b - a);
    const double mid = 0.5 * (a + b);
    for (int k = 0; k < n; ++k) {
        const double v0 = es.eigenvectors()(0, k);
        rule.nodes[k] = mid + half * es.eigenvalues()(k);
        rule.weights[k] = 2.0 * v0 * v0 * half;
    }
    return rule;
}

std::vector<SphereNode> s3_product_rule(int n_eta, int n_angle)
{
    // With s = sin^2(eta) the S^3 measure is (1/2) ds dxi1 dxi2.
    const QuadratureRule gl = gauss_legendre(n_eta, 0.0, 1.0);
    const double dxi = 2.0 * std::numbers::pi / n_angle;
    std::vector<SphereNode> out;
    out.reserve(static_cast<size_t>(n_eta) * n_angle * n_angle);
    for (int k = 0; k < n_eta; ++k) {
        const double s = gl.nodes[k];
        const double c = std::sqrt(1.0 - s);
        const double sn = std::sqrt(s);
        for (int i = 0; i < n_angle; ++i) {
            // Half-step offset on the second angle avoids aligned node stacks.
            const double xi1 = i * dxi;
            for (int j = 0; j < n_angle; ++j) {
                const double xi2 = (j + 0.5) * dxi;
                SphereNode node;
                node.direction << c * std::cos(xi1), c * std::sin(xi1), sn * std::cos(xi2),
                    sn * std::sin(xi2);
                node.weight = 0.5 * gl.weights[k] * dxi * dxi;
                out.push_back(node);
            }
        }
    }
    return out;
}

} // namespace geolab
