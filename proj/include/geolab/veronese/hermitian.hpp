#pragma once

#include <geolab/veronese/projective.hpp>

#include <Eigen/Core>

#include <array>

namespace geolab::veronese {

using Coords8 = Eigen::Matrix<double, 8, 1>;

/// Trace-free Hermitian 3x3 matrix with coordinates in a fixed
/// Frobenius-orthonormal basis (Gell-Mann matrices over sqrt 2).
class HermitianTraceless3 {
public:
    /// Throws Error unless m is Hermitian and trace free within 1e-12.
    explicit HermitianTraceless3(const Eigen::Matrix3cd& m);
    static HermitianTraceless3 from_coords(const Coords8& c);

    const Eigen::Matrix3cd& matrix() const { return m_; }
    const Coords8& coords() const { return c_; }
    double norm() const { return c_.norm(); }

private:
    HermitianTraceless3(const Eigen::Matrix3cd& m, const Coords8& c) : m_(m), c_(c) {}
    Eigen::Matrix3cd m_;
    Coords8 c_;
};

const std::array<Eigen::Matrix3cd, 8>& hermitian_basis();

/// sqrt(3/2) (z z*/|z|^2 - I/3); unit Frobenius norm.
HermitianTraceless3 projector_immersion(const ProjPoint& p);

} // namespace geolab::veronese
