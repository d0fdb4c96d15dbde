#include <doctest.h>

#include <geolab/common/error.hpp>
#include <geolab/spectra/eigen_solver.hpp>
#include <geolab/spectra/jacobi.hpp>
#include <geolab/spectra/lichnerowicz.hpp>
#include <geolab/spectra/report_io.hpp>
#include <geolab/surface/catalog.hpp>

#include <cmath>
#include <numbers>

using namespace geolab::spectra;
using geolab::surface::triangulate;

namespace {
constexpr double kPi = std::numbers::pi;

// Root of f on [lo, hi] by bisection, f(lo) and f(hi) of opposite sign.
template <class F>
double bisect(F f, double lo, double hi)
{
    const bool lo_neg = f(lo) < 0;
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        ((f(mid) < 0) == lo_neg ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

double bessel_j01() { return bisect([](double x) { return std::cyl_bessel_j(0.0, x); }, 2.0, 3.0); }
double catenoid_root() { return bisect([](double a) { return a * std::tanh(a) - 1.0; }, 0.5, 2.0); }

} // namespace

TEST_CASE("morse index counts entries below -tol_neg")
{
    auto r = make_report({3.0, -1.0, 2.0}, 1e-9, 3);
    CHECK(r.eigenvalues == std::vector<double>{-1.0, 2.0, 3.0});
    CHECK(morse_index(r) == 1);
    CHECK(r.index == 1);
    auto z = make_report({-1e-12, 0.5}, 1e-9, 2);
    CHECK(z.index == 0);
}

TEST_CASE("unit disk Dirichlet Laplacian")
{
    const double j01 = bessel_j01();
    CHECK(j01 == doctest::Approx(2.404825557695773).epsilon(1e-12));
    const auto mesh = triangulate(geolab::surface::disk_patch(), 40, 96, false, true);
    const auto J = assemble_jacobi(geolab::surface::disk_patch(), mesh);
    CHECK(J.dirichlet);
    const auto r = jacobi_spectrum(J, 4);
    CHECK(r.index == 0);
    CHECK(std::abs(r.eigenvalues[0] / (j01 * j01) - 1.0) < 1e-2);
    // Second and third are the degenerate j_{1,1}^2 pair.
    CHECK(r.eigenvalues[1] == doctest::Approx(r.eigenvalues[2]).epsilon(1e-2));
    for (double res : r.residuals) CHECK(res < 1e-8);
}

TEST_CASE("plane patch gives the plain Dirichlet Laplacian")
{
    const auto plane = geolab::surface::plane_patch();
    const auto mesh = triangulate(plane, 10, 10, false, false);
    const auto J = assemble_jacobi(plane, mesh);
    const auto L = assemble_laplacian(mesh);
    CHECK((J.op - L.op).norm() == 0.0);
    CHECK(J.dofs.size() == 81);
    for (double v : J.potential) CHECK(v == 0.0);
}

TEST_CASE("catenoid potential and symmetry")
{
    const auto cat = geolab::surface::catenoid_patch(1.0);
    const auto mesh = catenoid_mesh(1.0, 24, 12);
    const auto J = assemble_jacobi(cat, mesh);
    for (size_t i = 0; i < mesh.num_vertices(); ++i) {
        const double v = mesh.uv()[i].y();
        const double s = 1.0 / std::cosh(v);
        CHECK(J.potential[i] == doctest::Approx(2.0 * std::pow(s, 4)).epsilon(1e-8));
    }
    const SparseMatrix asym = J.op - SparseMatrix(J.op.transpose());
    CHECK(asym.norm() < 1e-12);

    // Ambient Ricci shifts the potential uniformly.
    const auto J2 = assemble_jacobi(cat, mesh, 0.5);
    for (size_t i = 0; i < mesh.num_vertices(); ++i) CHECK(J2.potential[i] - J.potential[i] == doctest::Approx(0.5));
}

TEST_CASE("catenoid index against the dense eigensolve")
{
    for (auto [a, expect] : {std::pair{0.5, 0}, std::pair{2.0, 1}}) {
        const auto J = assemble_jacobi(geolab::surface::catenoid_patch(a), catenoid_mesh(a, 32, 24));
        const auto dense = dense_spectrum(J.op, J.mass);
        CHECK(dense.index == expect);
        const auto r = jacobi_spectrum(J, 3);
        CHECK(r.index == expect);
        for (int i = 0; i < 3; ++i)
            CHECK(r.eigenvalues[static_cast<size_t>(i)] ==
                  doctest::Approx(dense.eigenvalues[static_cast<size_t>(i)]).epsilon(1e-8));
    }
}

TEST_CASE("all-negative requests are extended until the index is complete")
{
    // Diagonal operator with three negative entries.
    const int n = 100;
    SparseMatrix A(n, n), M(n, n);
    for (int i = 0; i < n; ++i) {
        A.insert(i, i) = i < 3 ? -1.0 - i : 1.0 + i;
        M.insert(i, i) = 1.0;
    }
    SpectrumOptions opt;
    opt.lower_bound = -4.0;
    const auto r = spectrum(A, M, 2, opt);
    CHECK(r.index == 3);
    CHECK(r.index_complete);
    CHECK(r.eigenvalues.size() >= 4);
    CHECK_THROWS_AS(spectrum(A, M, 0), geolab::Error);
    CHECK_THROWS_AS(spectrum(A, M, n + 1), geolab::Error);
}

TEST_CASE("catenoid stability transition")
{
    const double root = catenoid_root();
    CHECK(root == doctest::Approx(1.19967864).epsilon(1e-7));
    const auto t = locate_catenoid_transition(0.8, 1.6, 32, 24, 1e-3);
    CHECK(std::abs(t.a / root - 1.0) < 2e-2);
    CHECK(t.hi - t.lo <= 1e-3);
}

TEST_CASE("TT basis dimensions and constraints")
{
    CHECK(tt_basis(Eigen::Vector4i::Zero()).dim() == 9);
    for (const Eigen::Vector4i& k : {Eigen::Vector4i(1, 0, 0, 0), Eigen::Vector4i(1, -2, 0, 3), Eigen::Vector4i(1, 1, 1, 1)}) {
        const auto b = tt_basis(k);
        CHECK(b.dim() == 5);
        for (int i = 0; i < b.dim(); ++i) {
            const auto& h = b.basis[static_cast<size_t>(i)];
            CHECK(std::abs(h.trace()) < 1e-12);
            CHECK((h * k.cast<double>()).norm() < 1e-12);
            CHECK((h - h.transpose()).norm() == 0.0);
            for (int j = 0; j < b.dim(); ++j)
                CHECK(h.cwiseProduct(b.basis[static_cast<size_t>(j)]).sum() == doctest::Approx(i == j ? 1.0 : 0.0));
        }
    }
}

TEST_CASE("TT modes are eigentensors of the finite-difference rough Laplacian")
{
    // h(x) = H cos(2 pi k.x / L); 5-point second differences in each direction.
    const double L = 1.3, step = 1e-3;
    const Eigen::Vector4i k(1, -1, 2, 0);
    const auto b = tt_basis(k);
    const Eigen::Vector4d x0(0.1, 0.2, 0.3, 0.4);
    const Eigen::Vector4d w = (2.0 * kPi / L) * k.cast<double>();
    for (const auto& H : b.basis) {
        auto field = [&](const Eigen::Vector4d& x) -> Eigen::Matrix4d { return H * std::cos(w.dot(x)); };
        Eigen::Matrix4d lap = Eigen::Matrix4d::Zero();
        for (int d = 0; d < 4; ++d) {
            Eigen::Vector4d e = Eigen::Vector4d::Zero();
            e[d] = step;
            lap -= (-field(x0 + 2 * e) + 16 * field(x0 + e) - 30 * field(x0) + 16 * field(x0 - e) - field(x0 - 2 * e)) /
                   (12 * step * step);
        }
        const double expect = w.squaredNorm();
        CHECK((lap - expect * field(x0)).norm() < 1e-5 * expect);
    }
}

TEST_CASE("flat torus Lichnerowicz spectrum")
{
    const auto s = lichnerowicz_torus_spectrum(1.0, 1);
    const auto& ev = s.report.eigenvalues;
    int zeros = 0;
    for (double l : ev) zeros += std::abs(l) <= 1e-12 ? 1 : 0;
    CHECK(zeros == 9);
    CHECK(ev[9] == doctest::Approx(4 * kPi * kPi).epsilon(1e-12));
    CHECK(std::abs(ev[9] - 4 * kPi * kPi) < 1e-9);
    CHECK(s.report.index == 0);
    CHECK(s.modes.size() == 81);
    for (const auto& m : s.modes) CHECK(m.dim() == (m.k.isZero() ? 9 : 5));
    CHECK(ev.size() == 9 + 80 * 5);

    const auto s2 = lichnerowicz_torus_spectrum(2.0, 1);
    CHECK(s2.report.eigenvalues[9] == doctest::Approx(kPi * kPi).epsilon(1e-12));
    CHECK_THROWS_AS(lichnerowicz_torus_spectrum(0.0, 1), geolab::Error);
    CHECK_THROWS_AS(lichnerowicz_torus_spectrum(1.0, 0), geolab::Error);
}

TEST_CASE("spectrum CSV layout")
{
    const std::vector<NamedReport> reps{{"p", make_report({-1.0, 2.0}, 1e-9, 10)}};
    CHECK(spectrum_csv(reps) == "problem_id,i,eigenvalue\np,0,-1\np,1,2\n");
    CHECK(index_csv(reps).rfind("problem_id,index,tol_neg,operator_size,computed\np,1,", 0) == 0);
}
