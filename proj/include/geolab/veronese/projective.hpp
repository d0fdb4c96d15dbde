#pragma once

#include <geolab/chart/metric_chart.hpp>

#include <Eigen/Core>

#include <random>

namespace geolab::veronese {

using CVec = Eigen::VectorXcd;

/// Point of CP^n stored by its canonical representative: unit norm, first
/// nonzero coordinate real and positive.
class ProjPoint {
public:
    explicit ProjPoint(const CVec& homogeneous);

    const CVec& rep() const { return z_; }
    int dim() const { return static_cast<int>(z_.size()) - 1; }

private:
    CVec z_;
};

/// sqrt(1 - |<a, b>|^2) for the unit representatives (chordal distance).
double projective_distance(const ProjPoint& a, const ProjPoint& b);

/// [1 : z1 : z2] with z_k = x_{2k} + i x_{2k+1}, the affine chart of the Fubini-Study catalog entry.
ProjPoint from_chart(const chart::Vec& x);

/// Complex Gaussian samples, uniform for the Fubini-Study measure.
ProjPoint random_point(std::mt19937_64& rng, int n = 2);

/// (x^2, xy, xz, y^2, yz, z^2)
CVec monomials(const CVec& z);

ProjPoint veronese(const ProjPoint& p);

/// monomials / |monomials|, evaluated on the canonical representative.
CVec veronese_lift(const ProjPoint& p);

/// [w] for a unit vector w. Throws Error when |w| differs from 1 by more than 1e-12.
ProjPoint hopf_project(const CVec& w);

enum class Gauge {
    Adapted, // lift phases aligned with the lift at p
    Affine   // plain monomials of the affine representative
};

/// |<d lift(v), i lift(p)>| (real inner product on C^6 = R^12). v is a real
/// tangent vector in the affine chart centred at p: q = p + (v0 + i v1) f1 + (v2 + i v3) f2
/// for an orthonormal frame (p, f1, f2). Central differences with step h.
double horizontality_residual(const ProjPoint& p, const Eigen::Vector4d& v, Gauge gauge = Gauge::Adapted,
                              double h = 1e-4);

/// |<w, i lift(p)>| for an arbitrary direction w in C^6.
double vertical_pairing(const ProjPoint& p, const CVec& w);

} // namespace geolab::veronese
