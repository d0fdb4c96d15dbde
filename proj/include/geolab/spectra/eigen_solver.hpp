#pragma once

#include <Eigen/SparseCore>

#include <string>
#include <vector>

namespace geolab::spectra {

using SparseMatrix = Eigen::SparseMatrix<double>;

struct SpectralReport {
    std::vector<double> eigenvalues; // ascending
    int index = 0;                   // eigenvalues below -tol_neg
    double tol_neg = 0.0;
    size_t operator_size = 0;
    std::vector<double> residuals;   // relative residual per eigenpair (empty for exact spectra)

    /// False when every computed eigenvalue is negative, so the index may be larger.
    bool index_complete = true;
};

/// Builds a report from eigenvalues (sorted here).
SpectralReport make_report(std::vector<double> eigenvalues, double tol_neg, size_t operator_size);

/// Count of entries below -tol_neg.
int morse_index(const SpectralReport& report);

/// 1e-9 * |A|_F / |M|_F, the default negativity threshold.
double default_tol_neg(const SparseMatrix& A, const SparseMatrix& M);

struct SpectrumOptions {
    double tol = 1e-10;        // backward error |A x - l M x| / ((|A| + |l| |M|) |x|), Frobenius norms
    int max_iterations = 1000;
    double tol_neg = -1.0;     // negative: default_tol_neg
    double lower_bound = 0.0;  // known lower bound of the spectrum; the shift goes below it
    bool extend_for_index = true; // enlarge k while every computed eigenvalue is negative
};

/// k smallest eigenvalues of A x = l M x (A symmetric, M symmetric positive
/// definite) by shift-invert block subspace iteration with Rayleigh-Ritz.
/// Throws SolverNonConvergence with the residual norms when tol is not met.
SpectralReport spectrum(const SparseMatrix& A, const SparseMatrix& M, int k, const SpectrumOptions& opt = {});

/// Dense reference solve of the same problem (all eigenvalues unless k > 0).
SpectralReport dense_spectrum(const SparseMatrix& A, const SparseMatrix& M, int k = 0, double tol_neg = -1.0);

} // namespace geolab::spectra
