#include <geolab/common/error.hpp>
#include <geolab/spectra/eigen_solver.hpp>

#include <Eigen/Cholesky>
#include <Eigen/Eigenvalues>
#include <Eigen/SparseCholesky>
#include <fmt/core.h>

#include <algorithm>
#include <cmath>
#include <random>

namespace geolab::spectra {

SpectralReport make_report(std::vector<double> eigenvalues, double tol_neg, size_t operator_size)
{
    std::sort(eigenvalues.begin(), eigenvalues.end());
    SpectralReport r;
    r.eigenvalues = std::move(eigenvalues);
    r.tol_neg = tol_neg;
    r.operator_size = operator_size;
    r.index = morse_index(r);
    r.index_complete = r.eigenvalues.size() == operator_size || r.index < static_cast<int>(r.eigenvalues.size());
    return r;
}

int morse_index(const SpectralReport& report)
{
    return static_cast<int>(std::count_if(report.eigenvalues.begin(), report.eigenvalues.end(),
                                          [&](double l) { return l < -report.tol_neg; }));
}

double default_tol_neg(const SparseMatrix& A, const SparseMatrix& M) { return 1e-9 * A.norm() / M.norm(); }

SpectralReport dense_spectrum(const SparseMatrix& A, const SparseMatrix& M, int k, double tol_neg)
{
    const Eigen::MatrixXd Ad(A), Md(M);
    Eigen::GeneralizedSelfAdjointEigenSolver<Eigen::MatrixXd> es(Ad, Md);
    if (es.info() != Eigen::Success) throw SolverNonConvergence("dense generalized eigensolve failed");
    std::vector<double> ev(es.eigenvalues().data(), es.eigenvalues().data() + es.eigenvalues().size());
    if (k > 0 && static_cast<size_t>(k) < ev.size()) ev.resize(static_cast<size_t>(k));
    return make_report(std::move(ev), tol_neg >= 0 ? tol_neg : default_tol_neg(A, M), static_cast<size_t>(A.rows()));
}

namespace {

// Columns of Y made M-orthonormal by two rounds of Cholesky QR.
void m_orthonormalize(Eigen::MatrixXd& Y, const SparseMatrix& M)
{
    for (Eigen::Index j = 0; j < Y.cols(); ++j) {
        const double nrm = std::sqrt(Y.col(j).dot(M * Y.col(j)));
        if (nrm > 0) Y.col(j) /= nrm;
    }
    for (int pass = 0; pass < 2; ++pass) {
        const Eigen::MatrixXd G = Y.transpose() * (M * Y);
        Eigen::LLT<Eigen::MatrixXd> llt(G);
        if (llt.info() != Eigen::Success) throw SolverNonConvergence("subspace lost rank");
        Y = llt.matrixU().solve<Eigen::OnTheRight>(Y).eval();
    }
}

SpectralReport solve_once(const SparseMatrix& A, const SparseMatrix& M, int k, const SpectrumOptions& opt, double tol_neg)
{
    const Eigen::Index n = A.rows();
    // Shift below the spectrum so A - sigma M is positive definite.
    double sigma = std::min(0.0, opt.lower_bound) - 1.0;
    Eigen::SimplicialLDLT<SparseMatrix> ldlt;
    for (int attempt = 0;; ++attempt) {
        ldlt.compute(SparseMatrix(A - sigma * M));
        if (ldlt.info() == Eigen::Success && (ldlt.vectorD().array() > 0).all()) break;
        if (attempt == 8) throw SolverNonConvergence("no positive definite shift found below the spectrum");
        sigma = 4.0 * sigma - 1.0;
    }

    const Eigen::Index p = std::min<Eigen::Index>(n, std::max<Eigen::Index>(2 * k, k + 10));
    std::mt19937_64 rng(20240611);
    std::uniform_real_distribution<double> U(-1.0, 1.0);
    Eigen::MatrixXd X(n, p);
    for (Eigen::Index j = 0; j < p; ++j)
        for (Eigen::Index i = 0; i < n; ++i) X(i, j) = U(rng);
    m_orthonormalize(X, M);

    const double nA = A.norm(), nM = M.norm();
    std::vector<double> theta(static_cast<size_t>(k)), res(static_cast<size_t>(k));
    for (int it = 0; it < opt.max_iterations; ++it) {
        Eigen::MatrixXd Y = ldlt.solve(M * X);
        m_orthonormalize(Y, M);
        const Eigen::MatrixXd Ar = Y.transpose() * (A * Y);
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(0.5 * (Ar + Ar.transpose()));
        X = Y * es.eigenvectors();
        const Eigen::MatrixXd AX = A * X.leftCols(k), MX = M * X.leftCols(k);
        bool done = true;
        for (int i = 0; i < k; ++i) {
            const double l = es.eigenvalues()[i];
            theta[static_cast<size_t>(i)] = l;
            const double denom = (nA + std::abs(l) * nM) * X.col(i).norm();
            res[static_cast<size_t>(i)] = (AX.col(i) - l * MX.col(i)).norm() / (denom > 0 ? denom : 1.0);
            done = done && res[static_cast<size_t>(i)] < opt.tol;
        }
        if (done) {
            SpectralReport r = make_report(theta, tol_neg, static_cast<size_t>(n));
            r.residuals = res;
            return r;
        }
    }
    std::string msg = "subspace iteration did not converge; residuals";
    for (double r : res) msg += fmt::format(" {:.3g}", r);
    throw SolverNonConvergence(msg);
}

} // namespace

SpectralReport spectrum(const SparseMatrix& A, const SparseMatrix& M, int k, const SpectrumOptions& opt)
{
    const Eigen::Index n = A.rows();
    if (A.cols() != n || M.rows() != n || M.cols() != n) throw Error("operator and mass sizes differ");
    if (k <= 0 || k > n) throw Error(fmt::format("requested {} eigenvalues of an operator of size {}", k, n));
    const double tol_neg = opt.tol_neg >= 0 ? opt.tol_neg : default_tol_neg(A, M);
    while (true) {
        // Small problems, or nearly full spectra, go through the dense solver.
        SpectralReport r = (n <= 64 || 2 * k >= n) ? dense_spectrum(A, M, k, tol_neg) : solve_once(A, M, k, opt, tol_neg);
        if (!opt.extend_for_index || r.index_complete || k == n) return r;
        k = static_cast<int>(std::min<Eigen::Index>(n, 2 * k));
    }
}

} // namespace geolab::spectra
