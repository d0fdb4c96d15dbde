#include <geolab/common/error.hpp>
#include <geolab/decomposition/probes.hpp>

#include <Eigen/Dense>
#include <fmt/core.h>

#include <cmath>

namespace geolab::decomposition {

ChoiSchoen choi_schoen_probe(const ParametricPatch& patch, const Vec2& c, double r, const RegionOptions& opt)
{
    const Integrand a2 = [](const surface::FundamentalForms& f) { return f.a2; };
    ChoiSchoen out;
    out.energy = ball_integral(patch, c, r, a2, opt);
    out.peak = ball_sup(patch, c, r / 2, a2) * (r / 2) * (r / 2);
    return out;
}

namespace {

struct Forms2 {
    Eigen::Matrix2d g, b;
    double a2;
};

Forms2 forms2(const ParametricPatch& patch, double u, double v)
{
    const auto f = surface::evaluate_forms(patch, u, v);
    Forms2 out;
    out.g << f.E, f.F, f.F, f.G;
    out.b << f.e, f.f, f.f, f.g;
    out.a2 = f.a2;
    return out;
}

double simons_at(const ParametricPatch& patch, double u, double v, double h)
{
    const Forms2 c = forms2(patch, u, v);
    const Forms2 s[2][2] = {{forms2(patch, u - h, v), forms2(patch, u + h, v)},
                            {forms2(patch, u, v - h), forms2(patch, u, v + h)}};
    const Eigen::Matrix2d gi = c.g.inverse();
    Eigen::Matrix2d dg[2], db[2];
    double da2[2];
    for (int k = 0; k < 2; ++k) {
        dg[k] = (s[k][1].g - s[k][0].g) / (2 * h);
        db[k] = (s[k][1].b - s[k][0].b) / (2 * h);
        da2[k] = (s[k][1].a2 - s[k][0].a2) / (2 * h);
    }
    // gamma[m](i, j) = Γ^m_ij
    Eigen::Matrix2d gamma[2];
    for (int m = 0; m < 2; ++m)
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) {
                double acc = 0.0;
                for (int l = 0; l < 2; ++l) acc += gi(m, l) * (dg[i](j, l) + dg[j](i, l) - dg[l](i, j));
                gamma[m](i, j) = 0.5 * acc;
            }
    // nb[k](i, j) = ∇_k A_ij
    Eigen::Matrix2d nb[2];
    for (int k = 0; k < 2; ++k)
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) {
                double acc = db[k](i, j);
                for (int m = 0; m < 2; ++m) acc -= gamma[m](k, i) * c.b(m, j) + gamma[m](k, j) * c.b(i, m);
                nb[k](i, j) = acc;
            }
    double grad2 = 0.0;
    for (int k = 0; k < 2; ++k)
        for (int a = 0; a < 2; ++a) grad2 += gi(k, a) * (gi * nb[k] * gi).cwiseProduct(nb[a]).sum();

    Eigen::Matrix2d hess;
    hess(0, 0) = (s[0][1].a2 - 2 * c.a2 + s[0][0].a2) / (h * h);
    hess(1, 1) = (s[1][1].a2 - 2 * c.a2 + s[1][0].a2) / (h * h);
    hess(0, 1) = hess(1, 0) = (forms2(patch, u + h, v + h).a2 - forms2(patch, u + h, v - h).a2 -
                               forms2(patch, u - h, v + h).a2 + forms2(patch, u - h, v - h).a2) / (4 * h * h);
    double lap = 0.0;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            double t = hess(i, j);
            for (int k = 0; k < 2; ++k) t -= gamma[k](i, j) * da2[k];
            lap += gi(i, j) * t;
        }
    return 0.5 * lap - grad2 + c.a2 * c.a2;
}

} // namespace

double simons_residual(const ParametricPatch& patch, int n, double h)
{
    const auto& d = patch.domain();
    double worst = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const double u = d.u0 + (d.u1 - d.u0) * (0.1 + 0.8 * i / std::max(1, n - 1));
            const double v = d.v0 + (d.v1 - d.v0) * (0.1 + 0.8 * j / std::max(1, n - 1));
            const double H = surface::evaluate_forms(patch, u, v).H;
            if (std::abs(H) > 1e-8)
                throw Rejected(fmt::format("{} is not minimal: |H| = {:.3g} at ({}, {})", patch.name(), std::abs(H), u, v));
            worst = std::max(worst, std::abs(simons_at(patch, u, v, h)));
        }
    return worst;
}

} // namespace geolab::decomposition
