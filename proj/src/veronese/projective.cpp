#include <geolab/common/error.hpp>
#include <geolab/veronese/projective.hpp>

#include <Eigen/QR>
#include <fmt/core.h>

#include <cmath>

namespace geolab::veronese {

using cplx = std::complex<double>;

ProjPoint::ProjPoint(const CVec& homogeneous)
{
    const double n = homogeneous.norm();
    if (!(n > 0.0) || !std::isfinite(n)) throw Error("projective point needs a nonzero finite vector");
    z_ = homogeneous / n;
    for (Eigen::Index k = 0; k < z_.size(); ++k) {
        if (z_[k] == cplx(0.0, 0.0)) continue;
        const double a = std::abs(z_[k]);
        z_ *= std::conj(z_[k]) / a;
        z_[k] = a;
        break;
    }
}

double projective_distance(const ProjPoint& a, const ProjPoint& b)
{
    if (a.dim() != b.dim()) throw Error("points of different projective spaces");
    return std::sqrt(std::max(0.0, 1.0 - std::norm(a.rep().dot(b.rep()))));
}

ProjPoint from_chart(const chart::Vec& x)
{
    if (x.size() != 4) throw Error("affine chart of CP^2 has four real coordinates");
    CVec z(3);
    z << 1.0, cplx(x[0], x[1]), cplx(x[2], x[3]);
    return ProjPoint(z);
}

ProjPoint random_point(std::mt19937_64& rng, int n)
{
    std::normal_distribution<double> N;
    CVec z(n + 1);
    for (int k = 0; k <= n; ++k) z[k] = cplx(N(rng), N(rng));
    return ProjPoint(z);
}

CVec monomials(const CVec& z)
{
    if (z.size() != 3) throw Error("the quadratic Veronese map is defined on C^3");
    CVec m(6);
    m << z[0] * z[0], z[0] * z[1], z[0] * z[2], z[1] * z[1], z[1] * z[2], z[2] * z[2];
    return m;
}

ProjPoint veronese(const ProjPoint& p) { return ProjPoint(monomials(p.rep())); }

CVec veronese_lift(const ProjPoint& p)
{
    const CVec m = monomials(p.rep());
    return m / m.norm();
}

ProjPoint hopf_project(const CVec& w)
{
    if (std::abs(w.norm() - 1.0) > 1e-12) throw Error(fmt::format("Hopf projection needs a unit vector, |w| = {}", w.norm()));
    return ProjPoint(w);
}

namespace {

CVec lift_of(const CVec& q)
{
    const CVec m = monomials(q);
    return m / m.norm();
}

} // namespace

double horizontality_residual(const ProjPoint& p, const Eigen::Vector4d& v, Gauge gauge, double h)
{
    if (p.dim() != 2) throw Error("horizontality is defined for CP^2");
    Eigen::Matrix3cd A = Eigen::Matrix3cd::Identity();
    A.col(0) = p.rep();
    const Eigen::Matrix3cd Q = Eigen::HouseholderQR<Eigen::Matrix3cd>(A).householderQ();
    const CVec xi = cplx(v[0], v[1]) * Q.col(1) + cplx(v[2], v[3]) * Q.col(2);
    const CVec l0 = veronese_lift(p);
    auto lift = [&](double t) {
        CVec l = lift_of(p.rep() + t * xi);
        if (gauge == Gauge::Adapted) {
            const cplx ph = l0.dot(l);
            l *= std::conj(ph) / std::abs(ph);
        }
        return l;
    };
    const CVec dl = (lift(h) - lift(-h)) / (2 * h);
    return vertical_pairing(p, dl);
}

double vertical_pairing(const ProjPoint& p, const CVec& w)
{
    const CVec il = cplx(0.0, 1.0) * veronese_lift(p);
    return std::abs(il.dot(w).real());
}

} // namespace geolab::veronese
