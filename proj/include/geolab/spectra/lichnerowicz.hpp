#pragma once

#include <geolab/spectra/eigen_solver.hpp>

#include <Eigen/Core>

#include <vector>

namespace geolab::spectra {

/// Transverse-traceless symmetric tensors for the Fourier mode exp(2 pi i k.x / L).
struct TTModeBasis {
    Eigen::Vector4i k;
    std::vector<Eigen::Matrix4d> basis; // Frobenius-orthonormal
    int dim() const { return static_cast<int>(basis.size()); }
};

/// Null space of the trace and mode-k divergence constraints on Sym(4).
TTModeBasis tt_basis(const Eigen::Vector4i& k);

struct LichnerowiczSpectrum {
    SpectralReport report;
    std::vector<TTModeBasis> modes;
    std::vector<double> mode_eigenvalue; // per entry of modes
};

/// Delta_L = rough Laplacian - 2 R-ring on TT tensors of the flat torus of
/// the given side, all modes with |k_i| <= cutoff. The curvature term is
/// evaluated from the flat torus chart (it vanishes).
LichnerowiczSpectrum lichnerowicz_torus_spectrum(double side, int cutoff);

} // namespace geolab::spectra
