#include <geolab/common/csv.hpp>
#include <geolab/common/error.hpp>
#include <geolab/decomposition/decompose.hpp>
#include <geolab/spectra/jacobi.hpp>
#include <geolab/surface/mesh.hpp>

#include <boost/math/tools/roots.hpp>
#include <fmt/core.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>

namespace geolab::decomposition {

using surface::TriangleMesh;

std::string to_string(Label l)
{
    switch (l) {
    case Label::Thick: return "thick";
    case Label::Thin: return "thin";
    case Label::Sheeted: return "sheeted";
    case Label::NonSheeted: return "non_sheeted";
    }
    return "unknown";
}

size_t DecompositionLabels::count(Label l) const { return static_cast<size_t>(std::count(labels.begin(), labels.end(), l)); }

DecompositionLabels relabel(DecompositionLabels d, double threshold)
{
    d.threshold = threshold;
    d.labels.resize(d.scales.size());
    for (size_t i = 0; i < d.scales.size(); ++i) {
        const double s = d.scales[i];
        if (d.scheme == Scheme::Sheeted)
            d.labels[i] = d.measures[i] > threshold * s * s ? Label::NonSheeted : Label::Sheeted;
        else
            d.labels[i] = d.measures[i] > threshold * s * s * s * s ? Label::Thick : Label::Thin;
    }
    return d;
}

namespace {

// Parameter cells whose samples fall in the ball, padded by one cell.
struct Range {
    double lo, hi;
    bool full;
};

Range cover(const std::vector<bool>& occ, double a, double b, bool periodic)
{
    const int n = static_cast<int>(occ.size());
    const double step = (b - a) / n;
    if (!periodic) {
        int first = n, last = -1;
        for (int i = 0; i < n; ++i)
            if (occ[static_cast<size_t>(i)]) first = std::min(first, i), last = std::max(last, i);
        return {std::max(a, a + (first - 1) * step), std::min(b, a + (last + 2) * step), first == 0 && last == n - 1};
    }
    // Longest circular run of empty cells is the part left out.
    int best_len = 0, best_start = 0;
    for (int s = 0; s < n; ++s) {
        if (occ[static_cast<size_t>(s)] || !occ[static_cast<size_t>((s + n - 1) % n)]) continue;
        int len = 0;
        while (len < n && !occ[static_cast<size_t>((s + len) % n)]) ++len;
        if (len > best_len) best_len = len, best_start = s;
    }
    if (best_len <= 2) return {a, b, true};
    const int start = best_start + best_len; // first occupied cell after the gap
    const int len = n - best_len;
    return {a + (start - 1) * step, a + (start + len + 1) * step, false};
}

struct ClipGrid {
    std::optional<surface::ParametricPatch> patch;
    std::optional<TriangleMesh> mesh;
    double period_u = 0.0, period_v = 0.0; // nonzero when wrapped
};

ClipGrid build_grid(const surface::ParametricPatch& patch, const Vec3& p, double r_cap, const StabilityOptions& opt)
{
    const auto& d = patch.domain();
    const int N = opt.locate_grid;
    std::vector<bool> occ_u(static_cast<size_t>(N), false), occ_v(static_cast<size_t>(N), false);
    bool any = false;
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) {
            const double u = d.u0 + (d.u1 - d.u0) * (i + 0.5) / N, v = d.v0 + (d.v1 - d.v0) * (j + 0.5) / N;
            if ((patch.position(u, v) - p).norm() < r_cap) {
                occ_u[static_cast<size_t>(i)] = occ_v[static_cast<size_t>(j)] = true;
                any = true;
            }
        }
    ClipGrid grid;
    if (!any) return grid;
    const Range ru = cover(occ_u, d.u0, d.u1, d.periodic_u), rv = cover(occ_v, d.v0, d.v1, d.periodic_v);
    const bool wrap_u = d.periodic_u && ru.full, wrap_v = d.periodic_v && rv.full;
    surface::ParamDomain sub{ru.lo, ru.hi, rv.lo, rv.hi, wrap_u, wrap_v};
    grid.patch = patch.restricted(sub);
    grid.mesh = surface::triangulate(*grid.patch, opt.nu, opt.nv, wrap_u, wrap_v);
    grid.period_u = wrap_u ? d.u1 - d.u0 : 0.0;
    grid.period_v = wrap_v ? d.v1 - d.v0 : 0.0;
    return grid;
}

double unwrap(double x, double ref, double period)
{
    if (period <= 0) return x;
    while (x - ref > 0.5 * period) x -= period;
    while (ref - x > 0.5 * period) x += period;
    return x;
}

double lambda1_on(const ClipGrid& grid, const Vec3& p, double rho)
{
    if (!grid.mesh) return std::numeric_limits<double>::infinity();
    const auto& mesh = *grid.mesh;
    const auto& patch = *grid.patch;
    const size_t n = mesh.num_vertices();
    std::vector<bool> inside(n);
    for (size_t i = 0; i < n; ++i) inside[i] = (mesh.vertices()[i] - p).norm() < rho;

    std::vector<Vec2> uv = mesh.uv();
    std::vector<Vec3> pos = mesh.vertices();
    std::vector<Vec2> acc(n, Vec2::Zero());
    std::vector<int> hits(n, 0);
    for (const auto& [a, b] : mesh.edges()) {
        if (inside[static_cast<size_t>(a)] == inside[static_cast<size_t>(b)]) continue;
        const int in = inside[static_cast<size_t>(a)] ? a : b, out = in == a ? b : a;
        const Vec2 x0 = mesh.uv()[static_cast<size_t>(in)];
        Vec2 x1 = mesh.uv()[static_cast<size_t>(out)];
        x1.x() = unwrap(x1.x(), x0.x(), grid.period_u);
        x1.y() = unwrap(x1.y(), x0.y(), grid.period_v);
        const auto g = [&](double t) {
            const Vec2 x = x0 + t * (x1 - x0);
            return (patch.position(x.x(), x.y()) - p).norm() - rho;
        };
        std::uintmax_t iters = 100;
        const auto tol = [](double s, double t) { return std::abs(s - t) <= 1e-14; };
        const auto [lo, hi] = boost::math::tools::toms748_solve(g, 0.0, 1.0, tol, iters);
        acc[static_cast<size_t>(in)] += x0 + 0.5 * (lo + hi) * (x1 - x0);
        ++hits[static_cast<size_t>(in)];
    }
    for (size_t i = 0; i < n; ++i)
        if (hits[i] > 0) {
            uv[i] = acc[i] / hits[i];
            pos[i] = patch.position(uv[i].x(), uv[i].y());
        }

    std::vector<int> index(n, -1);
    std::vector<Vec3> sub_pos;
    std::vector<Vec2> sub_uv;
    std::vector<surface::Triangle> tris;
    for (const auto& t : mesh.triangles()) {
        if (!(inside[static_cast<size_t>(t[0])] && inside[static_cast<size_t>(t[1])] && inside[static_cast<size_t>(t[2])]))
            continue;
        surface::Triangle nt;
        for (int k = 0; k < 3; ++k) {
            int& slot = index[static_cast<size_t>(t[k])];
            if (slot < 0) {
                slot = static_cast<int>(sub_pos.size());
                sub_pos.push_back(pos[static_cast<size_t>(t[k])]);
                sub_uv.push_back(uv[static_cast<size_t>(t[k])]);
            }
            nt[k] = slot;
        }
        tris.push_back(nt);
    }
    if (tris.empty()) return std::numeric_limits<double>::infinity();
    const TriangleMesh sub(std::move(sub_pos), std::move(tris), std::move(sub_uv));
    bool interior = sub.closed();
    for (size_t i = 0; i < sub.num_vertices() && !interior; ++i) interior = !sub.is_boundary(static_cast<int>(i));
    if (!interior) return std::numeric_limits<double>::infinity();

    const auto J = spectra::assemble_jacobi(patch, sub);
    spectra::SpectrumOptions so;
    so.extend_for_index = false;
    return spectra::jacobi_spectrum(J, 1, so).eigenvalues.front();
}

} // namespace

double clipped_lambda1(const ParametricPatch& patch, const Vec3& p, double rho, double r_cap, const StabilityOptions& opt)
{
    if (rho > r_cap) throw Error("rho exceeds the cap used to build the grid");
    return lambda1_on(build_grid(patch, p, r_cap, opt), p, rho);
}

double stability_radius(const ParametricPatch& patch, const Vec3& p, double r_cap, const StabilityOptions& opt)
{
    if (!(r_cap > 0.0)) throw Error("r_cap must be positive");
    const ClipGrid grid = build_grid(patch, p, r_cap, opt);
    auto stable = [&](double rho) { return lambda1_on(grid, p, rho) > opt.stable_above; };
    if (stable(r_cap)) return r_cap;
    double lo = 0.0, hi = r_cap;
    while (hi - lo > opt.rel_tol * r_cap) {
        const double mid = 0.5 * (lo + hi);
        (stable(mid) ? lo : hi) = mid;
    }
    return lo;
}

DecompositionLabels sheeted_decomposition(const ParametricPatch& patch, double r, double n0,
                                          const std::vector<Vec2>& samples, const StabilityOptions& opt,
                                          const RegionOptions& region)
{
    DecompositionLabels d;
    d.scheme = Scheme::Sheeted;
    d.parameter = r;
    for (const auto& c : samples) {
        const Vec3 p = patch.position(c.x(), c.y());
        const double s = stability_radius(patch, p, r, opt);
        d.points.push_back({c.x(), c.y()});
        d.scales.push_back(s);
        d.measures.push_back(s > 0 ? ball_area(patch, c, s, region) : 0.0);
    }
    return relabel(std::move(d), n0);
}

double curvature_scale(const chart::MetricChart& chart, const chart::Vec& p, double eps, const chart::BallOptions& opt,
                       int n_radii)
{
    if (!(eps > 0.0)) throw Error("eps must be positive");
    if (n_radii < 4) throw Error("curvature_scale needs at least four radii");
    std::vector<double> radii;
    for (int k = 1; k <= n_radii; ++k) radii.push_back(static_cast<double>(k) / n_radii);
    const auto prof = chart::ball_profile(chart, p, radii, opt);
    const auto& E = prof.energies;
    if (E.back() <= eps) return 1.0;
    const size_t k = static_cast<size_t>(std::find_if(E.begin(), E.end(), [&](double e) { return e > eps; }) - E.begin());
    if (k == 0) return radii[0] * std::pow(eps / E[0], 0.25); // small balls: energy ~ r^4
    // Cubic through the four nearest samples in (log r, log E); linear in r when a sample vanishes.
    const size_t lo = std::min(k >= 2 ? k - 2 : 0, E.size() - 4);
    bool positive = true;
    for (size_t i = lo; i < lo + 4; ++i) positive = positive && E[i] > 0.0;
    if (!positive) return radii[k - 1] + (eps - E[k - 1]) / (E[k] - E[k - 1]) * (radii[k] - radii[k - 1]);
    auto interp = [&](double x) {
        double y = 0.0;
        for (size_t i = lo; i < lo + 4; ++i) {
            double w = std::log(E[i]);
            for (size_t j = lo; j < lo + 4; ++j)
                if (j != i) w *= (x - std::log(radii[j])) / (std::log(radii[i]) - std::log(radii[j]));
            y += w;
        }
        return y - std::log(eps);
    };
    std::uintmax_t iters = 100;
    const auto tol = [](double a, double b) { return std::abs(a - b) <= 1e-13; };
    const auto [a, b] = boost::math::tools::toms748_solve(interp, std::log(radii[k - 1]), std::log(radii[k]), tol, iters);
    return std::exp(0.5 * (a + b));
}

DecompositionLabels thick_thin(const chart::MetricChart& chart, double eps, double V0,
                               const std::vector<chart::Vec>& samples, const chart::BallOptions& opt)
{
    DecompositionLabels d;
    d.scheme = Scheme::ThickThin;
    d.parameter = eps;
    for (const auto& p : samples) {
        const double r = curvature_scale(chart, p, eps, opt);
        d.points.emplace_back(p.data(), p.data() + p.size());
        d.scales.push_back(r);
        d.measures.push_back(chart::geodesic_ball_volume(chart, p, r, opt));
    }
    return relabel(std::move(d), V0);
}

std::string labels_csv(const DecompositionLabels& d)
{
    std::vector<std::string> header{"sample_id"};
    const size_t dim = d.points.empty() ? 0 : d.points.front().size();
    for (size_t k = 0; k < dim; ++k) header.push_back(fmt::format("c{}", k));
    for (const char* h : {"scale", "measure", "label"}) header.emplace_back(h);
    CsvWriter csv(header);
    for (size_t i = 0; i < d.labels.size(); ++i) {
        std::vector<std::string> row{std::to_string(i)};
        for (double x : d.points[i]) row.push_back(format_double(x));
        row.push_back(format_double(d.scales[i]));
        row.push_back(format_double(d.measures[i]));
        row.push_back(to_string(d.labels[i]));
        csv.row(row);
    }
    return csv.str();
}

} // namespace geolab::decomposition
