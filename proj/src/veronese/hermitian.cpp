#include <geolab/common/error.hpp>
#include <geolab/veronese/hermitian.hpp>

#include <fmt/core.h>

#include <cmath>

namespace geolab::veronese {

using cplx = std::complex<double>;

const std::array<Eigen::Matrix3cd, 8>& hermitian_basis()
{
    static const std::array<Eigen::Matrix3cd, 8> basis = [] {
        const cplx i(0.0, 1.0);
        std::array<Eigen::Matrix3cd, 8> b;
        for (auto& m : b) m.setZero();
        b[0](0, 1) = b[0](1, 0) = 1.0;
        b[1](0, 1) = -i;
        b[1](1, 0) = i;
        b[2](0, 0) = 1.0;
        b[2](1, 1) = -1.0;
        b[3](0, 2) = b[3](2, 0) = 1.0;
        b[4](0, 2) = -i;
        b[4](2, 0) = i;
        b[5](1, 2) = b[5](2, 1) = 1.0;
        b[6](1, 2) = -i;
        b[6](2, 1) = i;
        b[7].diagonal() << 1.0, 1.0, -2.0;
        b[7] /= std::sqrt(3.0);
        for (auto& m : b) m /= std::sqrt(2.0);
        return b;
    }();
    return basis;
}

HermitianTraceless3::HermitianTraceless3(const Eigen::Matrix3cd& m) : m_(m)
{
    const double asym = (m - m.adjoint()).norm();
    const double tr = std::abs(m.trace());
    if (asym > 1e-12 || tr > 1e-12)
        throw Error(fmt::format("matrix is not trace-free Hermitian (asymmetry {:.3g}, trace {:.3g})", asym, tr));
    const auto& b = hermitian_basis();
    for (int a = 0; a < 8; ++a) c_[a] = (b[static_cast<size_t>(a)] * m).trace().real();
}

HermitianTraceless3 HermitianTraceless3::from_coords(const Coords8& c)
{
    Eigen::Matrix3cd m = Eigen::Matrix3cd::Zero();
    const auto& b = hermitian_basis();
    for (int a = 0; a < 8; ++a) m += c[a] * b[static_cast<size_t>(a)];
    return HermitianTraceless3(m, c);
}

HermitianTraceless3 projector_immersion(const ProjPoint& p)
{
    if (p.dim() != 2) throw Error("the projector immersion is defined on CP^2");
    const CVec& z = p.rep();
    const Eigen::Matrix3cd P = z * z.adjoint() / z.squaredNorm() - Eigen::Matrix3cd::Identity() / 3.0;
    Eigen::Matrix3cd M = std::sqrt(1.5) * P;
    M = 0.5 * (M + M.adjoint()).eval(); // exact Hermitian symmetry
    return HermitianTraceless3(M);
}

} // namespace geolab::veronese
