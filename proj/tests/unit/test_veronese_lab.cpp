#include <doctest.h>

#include <geolab/chart/catalog.hpp>
#include <geolab/chart/curvature.hpp>
#include <geolab/common/error.hpp>
#include <geolab/veronese/hermitian.hpp>
#include <geolab/veronese/immersion.hpp>
#include <geolab/veronese/projective.hpp>
#include <geolab/veronese/takahashi.hpp>

#include <cmath>
#include <numbers>

using namespace geolab::veronese;
namespace chart = geolab::chart;
using cplx = std::complex<double>;

namespace {

CVec c3(cplx a, cplx b, cplx c)
{
    CVec z(3);
    z << a, b, c;
    return z;
}

chart::Vec vec(std::initializer_list<double> xs)
{
    chart::Vec v(static_cast<Eigen::Index>(xs.size()));
    Eigen::Index i = 0;
    for (double x : xs) v[i++] = x;
    return v;
}

} // namespace

TEST_CASE("canonical projective points")
{
    const CVec z = c3({0.3, -1.2}, {2.0, 0.5}, {-0.7, 0.1});
    const ProjPoint p(z);
    CHECK(std::abs(p.rep().norm() - 1.0) < 1e-15);
    CHECK(p.rep()[0].imag() == 0.0);
    CHECK(p.rep()[0].real() > 0.0);
    for (cplx s : {cplx(2.0, 0.0), cplx(0.0, -3.0), cplx(std::cos(1.1), std::sin(1.1)) * 0.01})
        CHECK((ProjPoint(s * z).rep() - p.rep()).norm() < 1e-14);
    const ProjPoint q(c3(0.0, {0.0, 2.0}, 1.0));
    CHECK(q.rep()[1] == cplx(2.0 / std::sqrt(5.0), 0.0));
    CHECK_THROWS_AS(ProjPoint(CVec::Zero(3)), geolab::Error);
}

TEST_CASE("fs chart")
{
    const auto fs = fs_chart();
    CHECK((fs.metric(chart::Vec::Zero(4)) - chart::Mat::Identity(4, 4)).norm() < 1e-15);
    const auto e = chart::einstein_residual(fs, chart::Vec::Zero(4));
    CHECK(e.lambda == doctest::Approx(6.0).epsilon(1e-6));
    CHECK(e.normalized < 1e-4);
    const auto pack = chart::curvature_at(fs, chart::Vec::Zero(4));
    chart::Vec X = chart::Vec::Zero(4);
    X[0] = 1.0;
    const chart::Vec JX = fs.complex_structure(chart::Vec::Zero(4)) * X;
    CHECK(pack.sectional(X, JX) == doctest::Approx(4.0).epsilon(1e-3));
}

TEST_CASE("Veronese map and lift")
{
    CHECK((veronese(ProjPoint(c3(1, 0, 0))).rep() - (CVec(6) << 1, 0, 0, 0, 0, 0).finished()).norm() == 0.0);
    CHECK((veronese(ProjPoint(c3(0, 1, 0))).rep() - (CVec(6) << 0, 0, 0, 1, 0, 0).finished()).norm() == 0.0);
    CHECK((veronese_lift(ProjPoint(c3(1, 0, 0))) - (CVec(6) << 1, 0, 0, 0, 0, 0).finished()).norm() == 0.0);
    const CVec ones = CVec::Ones(6) / std::sqrt(6.0);
    CHECK((veronese_lift(ProjPoint(c3(1, 1, 1))) - ones).norm() < 1e-15);

    std::mt19937_64 rng(5);
    for (int i = 0; i < 1000; ++i) {
        const ProjPoint p = random_point(rng);
        const CVec l = veronese_lift(p);
        CHECK(std::abs(l.norm() - 1.0) < 1e-12);
        // Same class for any representative of p.
        const cplx s(std::cos(0.3 * i), std::sin(0.3 * i));
        CHECK(projective_distance(veronese(ProjPoint(2.5 * s * p.rep())), veronese(p)) < 1e-7);
        const CVec phased = (monomials(s * p.rep()));
        CHECK((phased - s * s * monomials(p.rep())).norm() < 1e-14);
        CHECK((hopf_project(l).rep() - veronese(p).rep()).norm() < 1e-14);
        CHECK((hopf_project(s * l).rep() - hopf_project(l).rep()).norm() < 1e-14);
    }
    CHECK((hopf_project((CVec(6) << 1, 0, 0, 0, 0, 0).finished()).rep() - (CVec(6) << 1, 0, 0, 0, 0, 0).finished()).norm() == 0.0);
    CHECK_THROWS_AS(hopf_project(CVec::Ones(6)), geolab::Error);
}

TEST_CASE("horizontality")
{
    std::mt19937_64 rng(9);
    std::normal_distribution<double> N;
    double worst = 0.0, affine_worst = 0.0;
    for (int i = 0; i < 1000; ++i) {
        const ProjPoint p = random_point(rng);
        const Eigen::Vector4d v(N(rng), N(rng), N(rng), N(rng));
        worst = std::max(worst, horizontality_residual(p, v));
        affine_worst = std::max(affine_worst, horizontality_residual(p, v, Gauge::Affine));
    }
    CHECK(worst < 1e-10);
    MESSAGE("fixed affine gauge residual ", affine_worst);
    const ProjPoint e1(c3(1, 0, 0));
    for (int k = 0; k < 4; ++k) {
        Eigen::Vector4d v = Eigen::Vector4d::Zero();
        v[k] = 1.0;
        CHECK(horizontality_residual(e1, v) < 1e-12);
        CHECK(horizontality_residual(e1, v, Gauge::Affine) < 1e-12);
    }
    const ProjPoint p = random_point(rng);
    CHECK(vertical_pairing(p, cplx(0.0, 1.0) * veronese_lift(p)) == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("Hermitian basis and projector immersion")
{
    const auto& b = hermitian_basis();
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j)
            CHECK((b[static_cast<size_t>(i)] * b[static_cast<size_t>(j)]).trace().real() == doctest::Approx(i == j ? 1.0 : 0.0));
    const auto e = projector_immersion(ProjPoint(c3(1, 0, 0)));
    Eigen::Matrix3cd expect = Eigen::Matrix3cd::Zero();
    expect.diagonal() << 2.0 / 3.0, -1.0 / 3.0, -1.0 / 3.0;
    expect *= std::sqrt(1.5);
    CHECK((e.matrix() - expect).norm() < 1e-15);
    CHECK(std::abs(e.norm() - 1.0) < 1e-12);
    CHECK((HermitianTraceless3::from_coords(e.coords()).matrix() - e.matrix()).norm() < 1e-15);
    CHECK_THROWS_AS(HermitianTraceless3(Eigen::Matrix3cd::Identity()), geolab::Error);

    std::mt19937_64 rng(3);
    for (int i = 0; i < 100; ++i) {
        const ProjPoint p = random_point(rng), q = random_point(rng);
        const auto xp = projector_immersion(p), xq = projector_immersion(q);
        CHECK(std::abs(xp.norm() - 1.0) < 1e-12);
        CHECK((xp.coords() - xq.coords()).norm() > 0.0);
        // |x(p) - x(q)|^2 = 3 (1 - |<p, q>|^2) for the normalized projectors.
        const double d = projective_distance(p, q);
        CHECK((xp.coords() - xq.coords()).squaredNorm() == doctest::Approx(3.0 * d * d).epsilon(1e-10));
    }
}

TEST_CASE("pullback ratio")
{
    const auto fs = fs_chart();
    const auto x = projector_map();
    const chart::Vec o = chart::Vec::Zero(4);
    for (int k = 0; k < 4; ++k) {
        chart::Vec v = chart::Vec::Zero(4);
        v[k] = 1.0;
        CHECK(std::abs(*pullback_ratio(x, fs, o, v, v) - 3.0) < 1e-6);
    }
    const auto pts = chart_samples(fs, 25, 1.0, 17, o);
    const auto st = pullback_stats(x, fs, pts, unit_directions(4, 4, 21));
    CHECK(st.count == 100);
    CHECK(std::abs(st.mean - 3.0) < 1e-6);
    CHECK(st.cv < 1e-6);
    // g-orthogonal pair: v and Jv.
    const chart::Vec p = pts[3];
    const chart::Vec v = unit_directions(4, 1, 2)[0];
    const chart::Mat G = fs.metric(p);
    chart::Vec w = fs.complex_structure(p) * v;
    w -= (v.dot(G * w) / v.dot(G * v)) * v;
    CHECK(!pullback_ratio(x, fs, p, v, w).has_value());
    CHECK(std::abs(pullback_inner(x, p, v, w)) < 1e-8);
}

TEST_CASE("Takahashi certification")
{
    // Round S^2 with the coordinate functions.
    const auto s2 = chart::s2_chart();
    const Immersion sphere = [](const chart::Vec& q) {
        return Eigen::Vector3d(std::sin(q[0]) * std::cos(q[1]), std::sin(q[0]) * std::sin(q[1]), std::cos(q[0])).eval();
    };
    const auto s2pts = chart_samples(s2, 40, 0.4, 1, vec({std::numbers::pi / 2, std::numbers::pi}));
    const auto rs = takahashi_certify([&](const chart::Vec& q) -> Eigen::VectorXd { return sphere(q); }, s2, s2pts);
    CHECK(rs.lambda_fit == doctest::Approx(2.0).epsilon(1e-6));
    CHECK(rs.residual < 1e-6);
    CHECK(rs.ratio == doctest::Approx(1.0).epsilon(1e-8));
    CHECK(rs.radius_check < 1e-6);

    // Projector immersion of CP^2.
    const auto fs = fs_chart();
    const auto pts = chart_samples(fs, 40, 0.8, 2, chart::Vec::Zero(4));
    const auto r = takahashi_certify(projector_map(), fs, pts);
    CHECK(std::abs(r.lambda_fit / 12.0 - 1.0) < 2e-2);
    CHECK(r.residual < 1e-6);
    CHECK(r.normal_residual < 1e-6);
    CHECK(r.lambda_induced == doctest::Approx(4.0).epsilon(1e-5));
    CHECK(r.radius_check < 1e-3);
    MESSAGE("lambda_fit ", r.lambda_fit, " residual ", r.residual, " ratio ", r.ratio);

    // Clifford torus (cos a, sin a, cos b, sin b)/sqrt 2 of the flat torus.
    const auto T = chart::flat_torus_chart(2, 2 * std::numbers::pi);
    const Immersion cliff = [](const chart::Vec& q) -> Eigen::VectorXd {
        return Eigen::Vector4d(std::cos(q[0]), std::sin(q[0]), std::cos(q[1]), std::sin(q[1])) / std::sqrt(2.0);
    };
    const auto rc = takahashi_certify(cliff, T, chart_samples(T, 30, 1.0, 3, vec({3.0, 3.0})));
    CHECK(rc.normal_residual < 1e-6);
    CHECK(rc.residual < 1e-6);
    CHECK(rc.lambda_induced == doctest::Approx(2.0).epsilon(1e-6));
    CHECK(rc.radius_check < 1e-6);
}

TEST_CASE("eigenmaps")
{
    const auto s2 = chart::s2_chart();
    const auto pts = chart_samples(s2, 30, 0.4, 4, vec({std::numbers::pi / 2, std::numbers::pi}));
    const ScalarFn fx = [](const chart::Vec& q) { return std::sin(q[0]) * std::cos(q[1]); };
    const ScalarFn fy = [](const chart::Vec& q) { return std::sin(q[0]) * std::sin(q[1]); };
    const ScalarFn fz = [](const chart::Vec& q) { return std::cos(q[0]); };
    const auto em = eigenmap({fx, fy, fz}, s2, pts);
    CHECK(em.lambda == doctest::Approx(2.0).epsilon(1e-6));
    CHECK(em.scale == doctest::Approx(1.0).epsilon(1e-6));
    for (const auto& q : pts) CHECK((em(q) - Eigen::Vector3d(fx(q), fy(q), fz(q))).norm() < 1e-6);
    const ScalarFn fxx = [&](const chart::Vec& q) { return fx(q) * fx(q); };
    CHECK_THROWS_AS(eigenmap({fx, fy, fxx}, s2, pts), geolab::Rejected);

    // The eight projector coordinates of CP^2.
    const auto fs = fs_chart();
    const auto fpts = chart_samples(fs, 20, 0.8, 6, chart::Vec::Zero(4));
    std::vector<ScalarFn> basis;
    for (int a = 0; a < 8; ++a)
        basis.push_back([a](const chart::Vec& x) {
            const CVec z = from_chart(x).rep();
            const Eigen::Matrix3cd P = z * z.adjoint() - Eigen::Matrix3cd::Identity() / 3.0;
            return (hermitian_basis()[static_cast<size_t>(a)] * P).trace().real();
        });
    const auto cp = eigenmap(basis, fs, fpts);
    CHECK(cp.lambda == doctest::Approx(12.0).epsilon(2e-2));
    for (const auto& x : fpts) CHECK((std::sqrt(3.0) * cp(x) - projector_immersion(from_chart(x)).coords()).norm() < 1e-6);
}

TEST_CASE("span rank probes")
{
    const auto lift = span_rank_probe(1000, 8);
    CHECK(lift.rank <= 12);
    MESSAGE("lift span rank ", lift.rank, " gap ", lift.gap);
    CHECK(lift.rank == 11);
    CHECK(projector_span_rank(1000, 8, false).rank == 9);
    CHECK(projector_span_rank(1000, 8, true).rank == 8);
    CHECK_THROWS_AS(span_rank_probe(5, 1), geolab::Error);
}

TEST_CASE("certification CSV")
{
    const std::vector<Check> checks{{"lambda_fit", 12.01, 12.0, 0.24}, {"radius", 1.1, 1.0, 1e-3}};
    CHECK(certification_csv(checks) ==
          "check,value,expected,tolerance,pass\nlambda_fit,12.01,12,0.24,true\nradius,1.1,1,0.001,false\n");
}
