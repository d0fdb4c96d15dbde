#include <doctest.h>

#include <geolab/common/error.hpp>
#include <geolab/surface/catalog.hpp>
#include <geolab/surface/discrete_curvature.hpp>
#include <geolab/surface/forms.hpp>
#include <geolab/surface/mesh.hpp>
#include <geolab/surface/mesh_io.hpp>

#include <cmath>
#include <numbers>
#include <random>

using namespace geolab::surface;
using geolab::DegenerateImmersion;
using geolab::DegenerateTriangle;
using geolab::InvalidMesh;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("evaluate_forms on the round sphere and the plane")
{
    const auto sphere = sphere_patch(1.0);
    for (double u : {0.0, 1.0, 2.5}) {
        const auto ff = evaluate_forms(sphere, u, 0.0);
        CHECK(ff.k1 == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(ff.k2 == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(ff.H == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(ff.K == doctest::Approx(1.0).epsilon(1e-12));
        // outward orientation
        CHECK(ff.normal.dot(sphere.position(u, 0.0)) == doctest::Approx(1.0));
    }
    const auto ff = evaluate_forms(plane_patch(), 0.2, -0.3);
    CHECK(ff.H == 0.0);
    CHECK(ff.K == 0.0);
    CHECK(ff.a2 == 0.0);
}

TEST_CASE("catenoid principal curvatures match the closed form +-sech^2 v")
{
    const auto cat = catenoid_patch(2.0);
    const auto ff = evaluate_forms(cat, 0.0, 0.0);
    CHECK(ff.k1 == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(ff.k2 == doctest::Approx(-1.0).epsilon(1e-12));
    CHECK(std::abs(ff.H) < 1e-15);
    CHECK(ff.a2 == doctest::Approx(2.0).epsilon(1e-12));
    for (double v : {-1.5, -0.4, 0.7, 1.9}) {
        const double sech2 = 1.0 / (std::cosh(v) * std::cosh(v));
        const auto f = evaluate_forms(cat, 0.3, v);
        CHECK(f.k1 == doctest::Approx(sech2).epsilon(1e-12));
        CHECK(f.k2 == doctest::Approx(-sech2).epsilon(1e-12));
        CHECK(f.a2 == doctest::Approx(2 * sech2 * sech2).epsilon(1e-12));
    }
}

TEST_CASE("forms invariants hold on every built-in patch")
{
    std::mt19937_64 rng(7);
    for (const auto& name : patch_names()) {
        const auto p = patch_by_name(name);
        const auto& d = p.domain();
        std::uniform_real_distribution<double> U(d.u0 + 0.05 * d.span_u(), d.u1 - 0.05 * d.span_u());
        std::uniform_real_distribution<double> V(d.v0 + 0.05 * d.span_v(), d.v1 - 0.05 * d.span_v());
        for (int s = 0; s < 200; ++s) {
            const double u = U(rng), v = V(rng);
            const auto ff = evaluate_forms(p, u, v);
            CHECK(ff.E * ff.G - ff.F * ff.F > 0);
            CHECK(ff.H * ff.H - ff.K >= -1e-12 * (1 + ff.a2));
            CHECK(ff.a2 == doctest::Approx(4 * ff.H * ff.H - 2 * ff.K).epsilon(1e-10).scale(1.0));
            CHECK(ff.H == doctest::Approx(0.5 * (ff.k1 + ff.k2)).scale(1.0));
        }
    }
}

TEST_CASE("analytic derivatives agree with central differences to O(h^2)")
{
    std::mt19937_64 rng(11);
    for (const auto& name : patch_names()) {
        const auto p = patch_by_name(name);
        const auto& d = p.domain();
        std::uniform_real_distribution<double> U(d.u0 + 0.1 * d.span_u(), d.u1 - 0.1 * d.span_u());
        std::uniform_real_distribution<double> V(d.v0 + 0.1 * d.span_v(), d.v1 - 0.1 * d.span_v());
        for (int s = 0; s < 20; ++s) {
            const double u = U(rng), v = V(rng);
            const auto a1 = p.d1(u, v);
            const auto f1 = p.d1_finite_difference(u, v);
            const auto a2 = p.d2(u, v);
            const auto f2 = p.d2_finite_difference(u, v);
            for (int k = 0; k < 2; ++k) CHECK((a1[k] - f1[k]).norm() < 1e-8 * (1 + a1[k].norm()));
            for (int k = 0; k < 3; ++k) CHECK((a2[k] - f2[k]).norm() < 1e-5 * (1 + a2[k].norm()));
        }
    }
    // Halving the step quarters the first-derivative error.
    const auto cat = catenoid_patch();
    const double u = 0.4, v = 0.6;
    const Vec3 exact = cat.d1(u, v)[1];
    auto fd = [&](double h) { return ((cat.position(u, v + h) - cat.position(u, v - h)) / (2 * h) - exact).norm(); };
    CHECK(fd(1e-2) / fd(5e-3) == doctest::Approx(4.0).epsilon(0.01));
}

TEST_CASE("built-in minimal patches have vanishing analytic mean curvature")
{
    std::mt19937_64 rng(3);
    for (const char* name : {"catenoid", "enneper", "bour", "plane", "helicoid"}) {
        const auto p = patch_by_name(name);
        const auto& d = p.domain();
        std::uniform_real_distribution<double> U(d.u0, d.u1), V(d.v0, d.v1);
        double worst = 0;
        for (int s = 0; s < 1000; ++s) worst = std::max(worst, std::abs(evaluate_forms(p, U(rng), V(rng)).H));
        CHECK_MESSAGE(worst <= 1e-10, name);
    }
    // The torus is not minimal.
    CHECK(std::abs(evaluate_forms(torus_patch(), 0.1, 0.2).H) > 0.1);
}

TEST_CASE("degenerate immersion is rejected")
{
    const auto sphere = sphere_patch();
    CHECK_THROWS_AS(evaluate_forms(sphere, 0.3, kPi / 2), DegenerateImmersion);
}

TEST_CASE("msq_residual")
{
    const auto flat = affine_graph(0, 0, 3.0);
    CHECK(msq_residual(flat, 0.1, 0.2) == 0.0);
    const auto par = parabola_graph();
    for (double x : {-0.9, 0.0, 0.5}) CHECK(msq_residual(par, x, 0.3) == doctest::Approx(2.0));

    std::mt19937_64 rng(5);
    for (const auto& g : minimal_graphs()) {
        std::uniform_real_distribution<double> X(g.domain.u0, g.domain.u1), Y(g.domain.v0, g.domain.v1);
        for (int s = 0; s < 500; ++s) CHECK(std::abs(msq_residual(g, X(rng), Y(rng))) <= 1e-8);
    }
    std::uniform_real_distribution<double> S(-1, 1);
    for (int s = 0; s < 200; ++s) CHECK(msq_residual(par, S(rng), S(rng)) >= 1.0);
}

TEST_CASE("msq_residual agrees with the analytic mean curvature of the graph patch")
{
    // For a graph, H = residual / (2 (1 + |grad u|^2)^{3/2}) up to sign.
    const auto g = scherk_graph(1.0);
    const auto patch = graph_patch(g);
    const auto ff = evaluate_forms(patch, 0.3, -0.2);
    CHECK(std::abs(ff.H) < 1e-12);
    const auto pp = graph_patch(parabola_graph());
    const auto f2 = evaluate_forms(pp, 0.25, 0.0);
    const double grad2 = 0.25;
    CHECK(std::abs(f2.H) == doctest::Approx(2.0 / (2 * std::pow(1 + grad2, 1.5))));
}

TEST_CASE("triangulate: counts and topology")
{
    const auto plane = triangulate(plane_patch(), 2, 2, false, false);
    CHECK(plane.num_triangles() == 8);
    CHECK(plane.num_vertices() == 9);
    CHECK(plane.euler_characteristic() == 1);
    CHECK_FALSE(plane.closed());

    const auto sphere = triangulate(sphere_patch(), 16, 8, true, false);
    CHECK(sphere.closed());
    CHECK(sphere.euler_characteristic() == 2);

    const auto disk = triangulate(disk_patch(), 8, 16, false, true);
    CHECK(disk.euler_characteristic() == 1);
    CHECK_FALSE(disk.is_boundary(0)); // collapsed centre

    const auto torus = triangulate(torus_patch(), 24, 12, true, true);
    CHECK(torus.closed());
    CHECK(torus.euler_characteristic() == 0);

    CHECK(double_torus_mesh().closed());
    CHECK(double_torus_mesh().euler_characteristic() == -2);
    CHECK(icosphere(2).euler_characteristic() == 2);
}

TEST_CASE("mesh areas")
{
    CHECK(mesh_area(unit_square_mesh()) == doctest::Approx(1.0).epsilon(1e-15));

    const double exact = 2 * kPi * (1 + std::sinh(1.0) * std::cosh(1.0));
    CHECK(exact == doctest::Approx(17.68).epsilon(1e-3));
    const auto cat = triangulate(catenoid_patch(1.0), 128, 128, true, false);
    CHECK(std::abs(mesh_area(cat) - exact) / exact < 0.01);

    const double s4 = mesh_area(icosphere(4));
    CHECK(std::abs(s4 - 4 * kPi) / (4 * kPi) < 0.005);
    // Inscribed meshes approach 4 pi from below.
    CHECK(mesh_area(icosphere(2)) < mesh_area(icosphere(3)));
    CHECK(mesh_area(icosphere(3)) < 4 * kPi);
}

TEST_CASE("planar interior vertices have zero discrete mean curvature")
{
    const auto plane = triangulate(plane_patch(), 10, 10, false, false);
    const auto c = mesh_mean_curvature(plane);
    CHECK(c.valid_count() == 81);
    CHECK(c.max_error(0.0) < 1e-13);
}

TEST_CASE("discrete H on the sphere converges at second order")
{
    std::vector<double> err;
    for (int level = 2; level <= 4; ++level) err.push_back(mesh_mean_curvature(icosphere(level)).max_error(1.0));
    for (size_t i = 0; i + 1 < err.size(); ++i) {
        const double ratio = err[i] / err[i + 1];
        CHECK(ratio == doctest::Approx(4.0).epsilon(0.15));
    }
}

TEST_CASE("discrete H on the catenoid decreases at second order")
{
    std::vector<double> err;
    for (int n : {32, 64, 128}) {
        const auto m = triangulate(catenoid_patch(1.0), n, n / 2, true, false);
        err.push_back(mesh_mean_curvature(m).max_error(0.0));
    }
    const double order = std::log2(err[1] / err[2]);
    CHECK(order >= 1.7);
    CHECK(err[2] < 1e-3);
}

TEST_CASE("discrete and analytic H agree on a non-minimal patch")
{
    std::vector<double> err;
    for (int n : {24, 48, 96}) {
        const auto torus = torus_patch();
        const auto m = triangulate(torus, n, n / 2, true, true);
        const auto c = mesh_mean_curvature(m);
        double worst = 0;
        for (size_t i = 0; i < m.num_vertices(); ++i) {
            const auto ff = evaluate_forms(torus, m.uv()[i].x(), m.uv()[i].y());
            worst = std::max(worst, std::abs(c.H[i] - ff.H));
        }
        err.push_back(worst);
    }
    CHECK(std::log2(err[1] / err[2]) >= 1.7);
}

TEST_CASE("mesh validation rejects bad input")
{
    // Moebius strip: winding cannot be made consistent.
    std::vector<Vec3> v;
    const int n = 12;
    for (int i = 0; i < n; ++i) {
        const double t = 2 * kPi * i / n;
        for (double s : {-0.3, 0.3}) {
            v.emplace_back((1 + s * std::cos(t / 2)) * std::cos(t), (1 + s * std::cos(t / 2)) * std::sin(t),
                           s * std::sin(t / 2));
        }
    }
    std::vector<Triangle> f;
    for (int i = 0; i < n; ++i) {
        int a = 2 * i, b = 2 * i + 1;
        int c = 2 * ((i + 1) % n), d = 2 * ((i + 1) % n) + 1;
        if (i == n - 1) std::swap(c, d); // the twist
        f.push_back({a, c, d});
        f.push_back({a, d, b});
    }
    CHECK_THROWS_AS(TriangleMesh(v, f), InvalidMesh);

    CHECK_THROWS_AS(TriangleMesh({{0, 0, 0}, {1, 0, 0}, {2, 0, 0}}, {{0, 1, 2}}), DegenerateTriangle);
    CHECK_THROWS_AS(TriangleMesh({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}}, {{0, 1, 1}}), InvalidMesh);
    // Three triangles on one edge.
    CHECK_THROWS_AS(TriangleMesh({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, -1, 0}, {0, 0, 1}},
                                 {{0, 1, 2}, {1, 0, 3}, {0, 1, 4}}),
                    InvalidMesh);
}

TEST_CASE("OFF and OBJ round trip preserves the mesh")
{
    const auto m = triangulate(catenoid_patch(0.5), 12, 6, true, false);
    for (const auto& back : {parse_off(to_off(m)), parse_obj(to_obj(m))}) {
        REQUIRE(back.num_vertices() == m.num_vertices());
        CHECK(back.triangles() == m.triangles());
        for (size_t i = 0; i < m.num_vertices(); ++i) CHECK(back.vertices()[i] == m.vertices()[i]);
    }
    CHECK_THROWS_AS(parse_obj("v 0 0 0\nv 1 0 0\nv 1 1 0\nv 0 1 0\nf 1 2 3 4\n"), InvalidMesh);
    const auto obj = parse_obj("# c\nv 0 0 0\nv 1 0 0\nv 0 1 0\nvn 0 0 1\nf 1//1 2//1 3//1\n");
    CHECK(obj.num_triangles() == 1);
}

TEST_CASE("curvature CSV has the documented columns")
{
    const auto m = icosphere(1);
    const auto csv = curvature_csv(m, mesh_mean_curvature(m));
    CHECK(csv.rfind("vid,x,y,z,H,K\n", 0) == 0);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == static_cast<long>(m.num_vertices()) + 1);
}
