#pragma once

#include <geolab/surface/forms.hpp>
#include <geolab/surface/patch.hpp>

#include <functional>

namespace geolab::decomposition {

using surface::ParametricPatch;
using surface::Vec2;
using surface::Vec3;
using Integrand = std::function<double(const surface::FundamentalForms&)>;

struct RegionOptions {
    int radial_nodes = 16;  // Gauss-Legendre nodes along each parameter ray
    int march = 96;         // ray samples used to bracket the ball boundary
    double tol = 1e-6;      // absolute change allowed between refinement levels
    int max_refinements = 3;
};

/// Integral of f dA over the part of the patch inside the ambient ball
/// B(F(c), r). The region is described in polar parameter coordinates
/// around c, so it has to be star-shaped from c; periodic directions are
/// cut at half a period on either side of c.
/// Throws RefinementError when the region is not star-shaped or the
/// quadrature does not settle within tol.
double ball_integral(const ParametricPatch& patch, const Vec2& c, double r, const Integrand& f,
                     const RegionOptions& opt = {});

double ball_area(const ParametricPatch& patch, const Vec2& c, double r, const RegionOptions& opt = {});

/// Largest value of f over sample points of the same region.
double ball_sup(const ParametricPatch& patch, const Vec2& c, double r, const Integrand& f, int n_theta = 64,
                int n_radial = 24);

} // namespace geolab::decomposition
