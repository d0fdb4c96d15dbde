#include <geolab/chart/catalog.hpp>
#include <geolab/chart/curvature.hpp>
#include <geolab/common/error.hpp>
#include <geolab/spectra/lichnerowicz.hpp>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <tuple>

namespace geolab::spectra {

namespace {

// Frobenius-orthonormal basis of symmetric 4x4 matrices.
std::vector<Eigen::Matrix4d> sym_basis()
{
    std::vector<Eigen::Matrix4d> out;
    for (int i = 0; i < 4; ++i)
        for (int j = i; j < 4; ++j) {
            Eigen::Matrix4d E = Eigen::Matrix4d::Zero();
            if (i == j) {
                E(i, i) = 1.0;
            } else {
                E(i, j) = E(j, i) = 1.0 / std::sqrt(2.0);
            }
            out.push_back(E);
        }
    return out;
}

} // namespace

TTModeBasis tt_basis(const Eigen::Vector4i& k)
{
    const auto sym = sym_basis();
    // Row 0: trace. Rows 1-4: (h k)_j.
    Eigen::Matrix<double, 5, 10> C;
    const Eigen::Vector4d kd = k.cast<double>();
    for (int b = 0; b < 10; ++b) {
        C(0, b) = sym[static_cast<size_t>(b)].trace();
        C.block<4, 1>(1, b) = sym[static_cast<size_t>(b)] * kd;
    }
    Eigen::JacobiSVD<Eigen::Matrix<double, 5, 10>> svd(C, Eigen::ComputeFullV);
    const auto& s = svd.singularValues();
    const double cut = 1e-10 * std::max(1.0, s[0]);
    int rank = 0;
    for (int i = 0; i < s.size(); ++i) rank += s[i] > cut ? 1 : 0;
    TTModeBasis out;
    out.k = k;
    for (int c = rank; c < 10; ++c) {
        Eigen::Matrix4d h = Eigen::Matrix4d::Zero();
        for (int b = 0; b < 10; ++b) h += svd.matrixV()(b, c) * sym[static_cast<size_t>(b)];
        out.basis.push_back(h);
    }
    return out;
}

LichnerowiczSpectrum lichnerowicz_torus_spectrum(double side, int cutoff)
{
    if (!(side > 0.0)) throw Error("torus side must be positive");
    if (cutoff < 1) throw Error("mode cutoff must be at least 1");

    // Curvature operator (R h)_ij = R_ikjl h^kl of the flat background.
    const auto torus = chart::flat_torus_chart(4, side);
    chart::Vec centre = chart::Vec::Constant(4, 0.5 * side);
    const auto pack = chart::curvature_at(torus, centre);
    auto rring = [&](const Eigen::Matrix4d& h) {
        Eigen::Matrix4d hup = pack.ginv * h * pack.ginv;
        Eigen::Matrix4d out = Eigen::Matrix4d::Zero();
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j)
                for (int k = 0; k < 4; ++k)
                    for (int l = 0; l < 4; ++l) out(i, j) += pack.Rm(i, k, j, l) * hup(k, l);
        return out;
    };

    std::vector<Eigen::Vector4i> ks;
    for (int a = -cutoff; a <= cutoff; ++a)
        for (int b = -cutoff; b <= cutoff; ++b)
            for (int c = -cutoff; c <= cutoff; ++c)
                for (int d = -cutoff; d <= cutoff; ++d) ks.emplace_back(a, b, c, d);
    std::stable_sort(ks.begin(), ks.end(), [](const auto& x, const auto& y) { return x.squaredNorm() < y.squaredNorm(); });

    LichnerowiczSpectrum out;
    std::vector<double> all;
    const double w = 2.0 * std::numbers::pi / side;
    for (const auto& k : ks) {
        TTModeBasis mode = tt_basis(k);
        const double rough = w * w * k.squaredNorm();
        // -2 R-ring restricted to the TT space of this mode.
        Eigen::MatrixXd Rm(mode.dim(), mode.dim());
        for (int a = 0; a < mode.dim(); ++a)
            for (int b = 0; b < mode.dim(); ++b)
                Rm(a, b) = -2.0 * (mode.basis[static_cast<size_t>(a)].cwiseProduct(rring(mode.basis[static_cast<size_t>(b)]))).sum();
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(0.5 * (Rm + Rm.transpose()));
        for (int a = 0; a < mode.dim(); ++a) all.push_back(rough + es.eigenvalues()[a]);
        out.mode_eigenvalue.push_back(rough + (mode.dim() > 0 ? es.eigenvalues().maxCoeff() : 0.0));
        out.modes.push_back(std::move(mode));
    }
    const size_t size = all.size();
    // A nonnegative Fourier multiplier: scale tol_neg by the largest eigenvalue.
    const double top = *std::max_element(all.begin(), all.end());
    out.report = make_report(std::move(all), 1e-9 * std::max(1.0, top), size);
    return out;
}

} // namespace geolab::spectra
