#include <geolab/common/error.hpp>
#include <geolab/spectra/jacobi.hpp>
#include <geolab/surface/catalog.hpp>
#include <geolab/surface/discrete_curvature.hpp>
#include <geolab/surface/forms.hpp>

#include <fmt/core.h>

#include <algorithm>
#include <cmath>

namespace geolab::spectra {

using surface::TriangleMesh;

namespace {

// |A|^2 at a parameter point; collapsed points (poles, disk centres) are
// evaluated a hair inside the domain.
double a2_at(const surface::ParametricPatch& patch, double u, double v)
{
    try {
        return surface::evaluate_forms(patch, u, v).a2;
    } catch (const DegenerateImmersion&) {
        const auto& d = patch.domain();
        const double cu = 0.5 * (d.u0 + d.u1), cv = 0.5 * (d.v0 + d.v1);
        const double s = 1e-4;
        return surface::evaluate_forms(patch, u + s * (cu - u), v + s * (cv - v)).a2;
    }
}

// P_ij = integral of V phi_i phi_j, V linear on each triangle.
SparseMatrix potential_mass(const TriangleMesh& mesh, const std::vector<double>& V)
{
    std::vector<Eigen::Triplet<double>> trips;
    trips.reserve(mesh.num_triangles() * 9);
    for (size_t t = 0; t < mesh.num_triangles(); ++t) {
        const double A = mesh.triangle_area(t);
        const auto& tri = mesh.triangles()[t];
        const double v[3] = {V[static_cast<size_t>(tri[0])], V[static_cast<size_t>(tri[1])], V[static_cast<size_t>(tri[2])]};
        for (int a = 0; a < 3; ++a) {
            const int b = (a + 1) % 3, c = (a + 2) % 3;
            trips.emplace_back(tri[a], tri[a], A * (v[a] / 10.0 + (v[b] + v[c]) / 30.0));
            const double off = A * ((v[a] + v[b]) / 30.0 + v[c] / 60.0);
            trips.emplace_back(tri[a], tri[b], off);
            trips.emplace_back(tri[b], tri[a], off);
        }
    }
    SparseMatrix P(static_cast<Eigen::Index>(mesh.num_vertices()), static_cast<Eigen::Index>(mesh.num_vertices()));
    P.setFromTriplets(trips.begin(), trips.end());
    return P;
}

SparseMatrix restrict_to(const SparseMatrix& S, const std::vector<int>& index_of, Eigen::Index n)
{
    std::vector<Eigen::Triplet<double>> trips;
    for (int k = 0; k < S.outerSize(); ++k)
        for (SparseMatrix::InnerIterator it(S, k); it; ++it) {
            const int i = index_of[static_cast<size_t>(it.row())], j = index_of[static_cast<size_t>(it.col())];
            if (i >= 0 && j >= 0) trips.emplace_back(i, j, it.value());
        }
    SparseMatrix R(n, n);
    R.setFromTriplets(trips.begin(), trips.end());
    return R;
}

JacobiOperator assemble_with_potential(const TriangleMesh& mesh, std::vector<double> V)
{
    JacobiOperator J;
    J.potential = std::move(V);
    J.dirichlet = !mesh.closed();
    std::vector<int> index_of(mesh.num_vertices(), -1);
    for (size_t i = 0; i < mesh.num_vertices(); ++i) {
        if (J.dirichlet && mesh.is_boundary(static_cast<int>(i))) continue;
        index_of[i] = static_cast<int>(J.dofs.size());
        J.dofs.push_back(static_cast<int>(i));
    }
    if (J.dofs.empty()) throw AssemblyError("mesh has no interior vertices");
    const auto n = static_cast<Eigen::Index>(J.dofs.size());
    J.stiffness = restrict_to(surface::cotan_stiffness(mesh), index_of, n);
    J.mass = restrict_to(surface::consistent_mass(mesh), index_of, n);
    J.op = J.stiffness - restrict_to(potential_mass(mesh, J.potential), index_of, n);
    const SparseMatrix asym = J.op - SparseMatrix(J.op.transpose());
    double worst = 0.0;
    for (int k = 0; k < asym.outerSize(); ++k)
        for (SparseMatrix::InnerIterator it(asym, k); it; ++it) worst = std::max(worst, std::abs(it.value()));
    if (worst > 1e-12) throw AssemblyError(fmt::format("Jacobi operator asymmetric by {:.3g}", worst));
    return J;
}

} // namespace

JacobiOperator assemble_jacobi(const surface::ParametricPatch& patch, const TriangleMesh& mesh, double ambient_ric)
{
    if (!mesh.has_uv()) throw AssemblyError("mesh carries no parameter coordinates");
    std::vector<double> V(mesh.num_vertices());
    for (size_t i = 0; i < V.size(); ++i) V[i] = a2_at(patch, mesh.uv()[i].x(), mesh.uv()[i].y()) + ambient_ric;
    return assemble_with_potential(mesh, std::move(V));
}

JacobiOperator assemble_laplacian(const TriangleMesh& mesh)
{
    return assemble_with_potential(mesh, std::vector<double>(mesh.num_vertices(), 0.0));
}

SpectralReport jacobi_spectrum(const JacobiOperator& J, int k, SpectrumOptions opt)
{
    double vmax = 0.0;
    for (int i : J.dofs) vmax = std::max(vmax, J.potential[static_cast<size_t>(i)]);
    // K is positive semidefinite, so the spectrum lies above -max V.
    opt.lower_bound = std::min(opt.lower_bound, -vmax);
    return spectrum(J.op, J.mass, k, opt);
}

TriangleMesh catenoid_mesh(double a, int nu, int nv)
{
    return surface::triangulate(surface::catenoid_patch(a), nu, nv, true, false);
}

double catenoid_lambda1(double a, int nu, int nv)
{
    const auto J = assemble_jacobi(surface::catenoid_patch(a), catenoid_mesh(a, nu, nv));
    SpectrumOptions opt;
    opt.extend_for_index = false;
    return jacobi_spectrum(J, 1, opt).eigenvalues.front();
}

Transition locate_catenoid_transition(double lo, double hi, int nu, int nv, double tol)
{
    Transition t;
    t.lo = lo;
    t.hi = hi;
    const double flo = catenoid_lambda1(lo, nu, nv), fhi = catenoid_lambda1(hi, nu, nv);
    t.evaluations = 2;
    if (!(flo > 0.0 && fhi < 0.0))
        throw Error(fmt::format("catenoid index does not change on [{}, {}] (lambda1 {} and {})", lo, hi, flo, fhi));
    while (t.hi - t.lo > tol) {
        const double mid = 0.5 * (t.lo + t.hi);
        (catenoid_lambda1(mid, nu, nv) > 0.0 ? t.lo : t.hi) = mid;
        ++t.evaluations;
    }
    t.a = 0.5 * (t.lo + t.hi);
    return t;
}

} // namespace geolab::spectra
