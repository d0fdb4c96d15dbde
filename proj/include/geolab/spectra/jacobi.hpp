#pragma once

#include <geolab/spectra/eigen_solver.hpp>
#include <geolab/surface/mesh.hpp>
#include <geolab/surface/patch.hpp>

#include <vector>

namespace geolab::spectra {

/// Discrete Jacobi operator K - P on the free degrees of freedom.
/// K is the cotangent stiffness, P_ij = integral of V phi_i phi_j with the
/// potential V = |A|^2 + ambient_ric interpolated linearly, M the consistent mass.
struct JacobiOperator {
    SparseMatrix op;
    SparseMatrix stiffness;
    SparseMatrix mass;
    std::vector<int> dofs;          // mesh vertex of each unknown
    std::vector<double> potential;  // per mesh vertex
    bool dirichlet = false;
};

/// Boundary vertices are eliminated (Dirichlet); closed meshes keep all vertices.
/// The mesh must carry parameter coordinates of the patch. Throws AssemblyError
/// when the assembled operator is asymmetric beyond 1e-12.
JacobiOperator assemble_jacobi(const surface::ParametricPatch& patch, const surface::TriangleMesh& mesh,
                               double ambient_ric = 0.0);

/// Same operator with the potential removed (pure Dirichlet Laplacian).
JacobiOperator assemble_laplacian(const surface::TriangleMesh& mesh);

SpectralReport jacobi_spectrum(const JacobiOperator& J, int k, SpectrumOptions opt = {});

/// Catenoid |v| <= a meshed with nu x nv cells.
surface::TriangleMesh catenoid_mesh(double a, int nu, int nv);
/// Smallest Jacobi eigenvalue of the truncated catenoid.
double catenoid_lambda1(double a, int nu, int nv);

struct Transition {
    double a = 0.0;      // bisection estimate
    double lo = 0.0, hi = 0.0;
    int evaluations = 0;
};

/// Bisection for the half-height where the catenoid index jumps 0 -> 1.
Transition locate_catenoid_transition(double lo, double hi, int nu, int nv, double tol = 1e-4);

} // namespace geolab::spectra
