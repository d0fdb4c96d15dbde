#include <geolab/cli/commands.hpp>
#include <geolab/cli/sha256.hpp>
#include <geolab/cli/svg.hpp>
#include <geolab/cli/report_index.hpp>
#include <geolab/chart/catalog.hpp>
#include <geolab/chart/curvature.hpp>
#include <geolab/chart/functionals.hpp>
#include <geolab/chart/geodesic.hpp>
#include <geolab/chart/topology.hpp>
#include <geolab/common/csv.hpp>
#include <geolab/decomposition/decompose.hpp>
#include <geolab/decomposition/gauss_bonnet.hpp>
#include <geolab/decomposition/monotonicity.hpp>
#include <geolab/decomposition/probes.hpp>
#include <geolab/flow/mcf.hpp>
#include <geolab/flow/ricci.hpp>
#include <geolab/flow/trajectory_io.hpp>
#include <geolab/spectra/jacobi.hpp>
#include <geolab/spectra/lichnerowicz.hpp>
#include <geolab/spectra/report_io.hpp>
#include <geolab/surface/catalog.hpp>
#include <geolab/surface/forms.hpp>
#include <geolab/surface/mesh.hpp>
#include <geolab/veronese/hermitian.hpp>
#include <geolab/veronese/immersion.hpp>
#include <geolab/veronese/projective.hpp>
#include <geolab/veronese/takahashi.hpp>

#include <boost/math/tools/roots.hpp>
#include <fmt/core.h>

#include <cmath>
#include <fstream>
#include <iostream>
#include <limits>
#include <numbers>
#include <random>

namespace geolab::cli {

namespace {

constexpr double kPi = std::numbers::pi;
// Squared first zero of J0, the Dirichlet eigenvalue of the unit disk.
constexpr double kDiskLambda1 = 5.783185962946784;

std::string num(double x) { return format_double(x); }

// Root of f on [lo, hi] where f changes sign.
template <class F>
double root(F f, double lo, double hi)
{
    std::uintmax_t iters = 200;
    const auto r = boost::math::tools::toms748_solve(f, lo, hi, boost::math::tools::eps_tolerance<double>(52), iters);
    return 0.5 * (r.first + r.second);
}

// Geodesic ball volume in the 4-dimensional space form of curvature k.
double space_form_ball(int k, double r)
{
    if (k == 0) return kPi * kPi * std::pow(r, 4) / 2;
    if (k > 0) return 2 * kPi * kPi * (2.0 / 3.0 - std::cos(r) + std::pow(std::cos(r), 3) / 3.0);
    return 2 * kPi * kPi * (std::pow(std::cosh(r), 3) / 3.0 - std::cosh(r) + 2.0 / 3.0);
}

// Half-height where a tanh a = 1, the catenoid stability transition.
double catenoid_transition() { return root([](double a) { return a * std::tanh(a) - 1.0; }, 0.5, 2.0); }

std::vector<double> increasing_radii(const RunContext& ctx)
{
    const auto r = ctx.config().list("radii");
    for (size_t i = 1; i < r.size(); ++i)
        if (!(r[i] > r[i - 1])) throw UsageError("radii must increase");
    return r;
}

// ---------------------------------------------------------------- verify-minimal

void verify_minimal(RunContext& ctx)
{
    const std::string target = ctx.config().target();
    const long n = ctx.config().integer("samples");
    std::mt19937_64 rng(ctx.seed());
    CsvWriter csv({"surface", "sample", "u", "v", "residual"});
    std::vector<Series> plots;

    for (const std::string name : {"catenoid", "enneper", "bour", "plane", "helicoid"}) {
        if (target != "all" && target != name) continue;
        const auto patch = surface::patch_by_name(name);
        const auto& d = patch.domain();
        // Stay off collapsed or boundary lines.
        std::uniform_real_distribution<double> U(d.u0 + 0.01 * d.span_u(), d.u1 - 0.01 * d.span_u());
        std::uniform_real_distribution<double> V(d.v0 + 0.01 * d.span_v(), d.v1 - 0.01 * d.span_v());
        double worst = 0.0;
        Series s{name, {}, {}};
        for (long i = 0; i < n; ++i) {
            const double u = U(rng), v = V(rng);
            const double H = std::abs(surface::evaluate_forms(patch, u, v).H);
            worst = std::max(worst, H);
            csv.row({name, std::to_string(i), num(u), num(v), num(H)});
            s.x.push_back(static_cast<double>(i));
            s.y.push_back(std::log10(std::max(H, 1e-20)));
        }
        plots.push_back(std::move(s));
        ctx.check_le(name + "_max_abs_H", worst, 1e-10);
    }
    if (target == "all" || target == "scherk") {
        const auto g = surface::scherk_graph();
        const auto& d = g.domain;
        std::uniform_real_distribution<double> X(d.u0, d.u1), Y(d.v0, d.v1);
        double worst = 0.0;
        Series s{"scherk", {}, {}};
        for (long i = 0; i < n; ++i) {
            const double x = X(rng), y = Y(rng);
            const double r = std::abs(surface::msq_residual(g, x, y));
            worst = std::max(worst, r);
            csv.row({"scherk", std::to_string(i), num(x), num(y), num(r)});
            s.x.push_back(static_cast<double>(i));
            s.y.push_back(std::log10(std::max(r, 1e-20)));
        }
        plots.push_back(std::move(s));
        ctx.check_le("scherk_max_msq_residual", worst, 1e-8);
    }
    ctx.write("minimality.csv", csv.str());
    ctx.write("minimality.svg", line_plot("minimality residuals", "sample", "log10 residual", plots));
}

// ---------------------------------------------------------------- mcf

void mcf(RunContext& ctx)
{
    const auto& c = ctx.config();
    const double dt = c.number("dt"), t_end = c.number("t_end");
    const std::string scheme_name = c.get("scheme");
    if (scheme_name != "explicit" && scheme_name != "semi_implicit") throw UsageError("scheme is explicit or semi_implicit");
    const auto scheme = scheme_name == "explicit" ? flow::Scheme::Explicit : flow::Scheme::SemiImplicit;
    const auto mesh = surface::icosphere(static_cast<int>(c.integer("level")));
    const auto traj = flow::mcf_run(mesh, dt, t_end, scheme);
    ctx.write("trajectory.csv", flow::trajectory_csv(traj));

    CsvWriter csv({"t", "radius", "exact"});
    Series measured{"mesh", {}, {}}, exact{"sqrt(1 - 2t)", {}, {}};
    for (size_t i = 0; i < traj.size(); ++i) {
        const double t = traj.times[i], r = flow::mean_radius(traj.states[i]);
        const double e = std::sqrt(std::max(0.0, 1.0 - 2.0 * t));
        csv.row({num(t), num(r), num(e)});
        measured.x.push_back(t), measured.y.push_back(r);
        exact.x.push_back(t), exact.y.push_back(e);
    }
    ctx.write("radius.csv", csv.str());
    ctx.write("radius.svg", line_plot("sphere under mean curvature flow", "t", "radius", {measured, exact}));

    const double t = traj.times.back();
    ctx.check_abs("end_time", t, t_end, 0.5 * dt);
    ctx.check_abs("radius_at_end", flow::mean_radius(traj.states.back()), std::sqrt(1.0 - 2.0 * t), 1e-3);
    double rise = -std::numeric_limits<double>::infinity();
    for (size_t i = 1; i < traj.size(); ++i) rise = std::max(rise, traj.measure[i] - traj.measure[i - 1]);
    ctx.check_le("max_area_increase", rise, 0.0);
}

// ---------------------------------------------------------------- ricci

void ricci(RunContext& ctx)
{
    const auto& c = ctx.config();
    const std::string target = c.target();
    const double dt = c.number("dt"), t_end = c.number("t_end");
    const bool normalized = c.flag("normalized");

    flow::MetricFamily fam = target == "s4"           ? flow::s4_scale_family()
                             : target == "flat_torus" ? flow::flat_torus_family()
                             : target == "s2xs2"      ? flow::s2xs2_family()
                                                      : flow::perturbed_family();
    flow::Params theta0;
    if (c.get("theta") == "auto") {
        if (target == "flat_torus") theta0 = (flow::Params(4) << 1.0, 2.0, 3.0, 4.0).finished();
        else if (target == "s2xs2") theta0 = (flow::Params(2) << 1.0, 2.0).finished();
        else if (target == "perturbed") theta0 = flow::Params::Constant(1, 0.1);
        else theta0 = flow::Params::Constant(1, 1.0);
    } else {
        const auto v = c.list("theta");
        theta0 = Eigen::Map<const flow::Params>(v.data(), static_cast<Eigen::Index>(v.size()));
    }
    if (theta0.size() != fam.lo.size()) throw UsageError(fmt::format("{} takes {} parameters", target, fam.lo.size()));

    if (target == "perturbed") {
        bool rejected = false;
        std::string message;
        try {
            flow::project_ricci(fam, theta0);
        } catch (const ProjectionResidual& e) {
            rejected = true;
            message = e.what();
        }
        CsvWriter csv({"theta_0", "rejected"});
        csv.row({num(theta0[0]), rejected ? "true" : "false"});
        ctx.write("projection.csv", csv.str());
        if (rejected) std::cout << "projection rejected: " << message << "\n";
        ctx.check_true("ricci_leaves_family", rejected);
        return;
    }

    const auto traj = flow::ricci_flow_family(fam, theta0, dt, t_end, normalized);
    ctx.write("trajectory.csv", flow::trajectory_csv(traj));
    std::vector<Series> plots;
    for (Eigen::Index k = 0; k < theta0.size(); ++k) {
        Series s{fmt::format("theta_{}", k), {}, {}};
        for (size_t i = 0; i < traj.size(); ++i) s.x.push_back(traj.times[i]), s.y.push_back(traj.states[i][k]);
        plots.push_back(std::move(s));
    }
    ctx.write("trajectory.svg", line_plot("Ricci flow in " + fam.name, "t", "parameter", plots));

    const flow::Params& end = traj.states.back();
    const double t = traj.times.back();
    ctx.check_abs("end_time", t, t_end, 0.5 * dt);
    if (target == "flat_torus") {
        ctx.check_abs("max_parameter_change", (end - theta0).cwiseAbs().maxCoeff(), 0.0, 0.0);
    } else if (normalized) {
        ctx.check_le("max_parameter_change", (end - theta0).cwiseAbs().maxCoeff(), 1e-6);
    } else if (target == "s4") {
        // Ric = 3 g0 for every scale, so s' = -6.
        ctx.check_abs("scale_at_end", end[0], theta0[0] - 6.0 * t, 1e-4);
    } else {
        // Each unit-curvature factor has Ric = g0 on its own sphere: a' = -2.
        for (Eigen::Index k = 0; k < end.size(); ++k)
            ctx.check_abs(fmt::format("radius_sq_{}_at_end", k), end[k], theta0[k] - 2.0 * t, 1e-4);
    }
}

// ---------------------------------------------------------------- spectrum

void spectrum(RunContext& ctx)
{
    const auto& c = ctx.config();
    const std::string target = c.target();
    const int k = static_cast<int>(c.integer("k"));
    int nu = static_cast<int>(c.integer("nu")), nv = static_cast<int>(c.integer("nv"));
    std::vector<spectra::NamedReport> reports;

    if (target == "disk") {
        if (nu == 0) nu = 40, nv = 96;
        const auto disk = surface::disk_patch();
        const auto mesh = surface::triangulate(disk, nu, nv, false, true);
        const auto rep = spectra::jacobi_spectrum(spectra::assemble_jacobi(disk, mesh), k);
        reports.emplace_back("disk", rep);
        ctx.check_abs("disk_lambda1_relative", rep.eigenvalues[0] / kDiskLambda1, 1.0, 1e-2);
        ctx.check_abs("disk_index", rep.index, 0, 0);
    } else if (target == "catenoid") {
        if (nu == 0) nu = 32, nv = 24;
        const double a = c.number("a");
        const auto mesh = spectra::catenoid_mesh(a, nu, nv);
        const auto rep = spectra::jacobi_spectrum(spectra::assemble_jacobi(surface::catenoid_patch(a), mesh), k);
        reports.emplace_back(fmt::format("catenoid_a{}", num(a)), rep);
        ctx.check_abs("catenoid_index", rep.index, a > catenoid_transition() ? 1 : 0, 0);
        ctx.check_true("index_complete", rep.index_complete);
    } else if (target == "transition") {
        if (nu == 0) nu = 32, nv = 24;
        const auto tr = spectra::locate_catenoid_transition(c.number("lo"), c.number("hi"), nu, nv);
        CsvWriter csv({"a", "lo", "hi", "evaluations", "closed_form"});
        csv.row({num(tr.a), num(tr.lo), num(tr.hi), std::to_string(tr.evaluations), num(catenoid_transition())});
        ctx.write("transition.csv", csv.str());
        for (double a : {tr.lo, tr.hi}) {
            const auto mesh = spectra::catenoid_mesh(a, nu, nv);
            reports.emplace_back(fmt::format("catenoid_a{}", num(a)),
                                 spectra::jacobi_spectrum(spectra::assemble_jacobi(surface::catenoid_patch(a), mesh), k));
        }
        ctx.check_abs("transition_relative", tr.a / catenoid_transition(), 1.0, 2e-2);
    } else {
        const double side = c.number("side");
        const auto L = spectra::lichnerowicz_torus_spectrum(side, static_cast<int>(c.integer("cutoff")));
        reports.emplace_back("lichnerowicz", L.report);
        const double tol = L.report.tol_neg;
        int zeros = 0;
        double first_positive = std::numeric_limits<double>::infinity();
        for (double l : L.report.eigenvalues) {
            if (std::abs(l) <= tol) ++zeros;
            else if (l > tol) first_positive = std::min(first_positive, l);
        }
        int worst_dim = 5;
        for (const auto& m : L.modes)
            if (!m.k.isZero() && m.dim() != 5) worst_dim = m.dim();
        const double base = 2 * kPi / side;
        ctx.check_abs("zero_multiplicity", zeros, 9, 0);
        ctx.check_abs("first_positive", first_positive, base * base, 1e-9);
        ctx.check_abs("tt_dimension_nonzero_modes", worst_dim, 5, 0);
        ctx.check_abs("einstein_index", L.report.index, 0, 0);
    }

    ctx.write("spectrum.csv", spectra::spectrum_csv(reports));
    ctx.write("index.csv", spectra::index_csv(reports));
    std::vector<Series> plots;
    for (const auto& [name, rep] : reports) {
        Series s{name, {}, {}};
        for (size_t i = 0; i < rep.eigenvalues.size(); ++i) s.x.push_back(static_cast<double>(i)), s.y.push_back(rep.eigenvalues[i]);
        plots.push_back(std::move(s));
    }
    ctx.write("spectrum.svg", line_plot("spectrum " + target, "i", "eigenvalue", plots));
}

// ---------------------------------------------------------------- monotonicity

void monotonicity(RunContext& ctx)
{
    const std::string target = ctx.config().target();
    const auto radii = increasing_radii(ctx);
    if (target == "plane" || target == "catenoid") {
        const auto patch = target == "plane" ? surface::plane_patch() : surface::catenoid_patch(2.0);
        const auto prof = decomposition::area_ratio_profile(patch, {0.0, 0.0}, radii);
        ctx.write("profile.csv", decomposition::area_profile_csv(prof));
        ctx.write("profile.svg", line_plot("area ratio " + target, "r", "area / (pi r^2)", {{target, prof.radii, prof.ratios}}));
        if (target == "plane") {
            double worst = 0.0;
            for (double q : prof.ratios) worst = std::max(worst, std::abs(q - 1.0));
            ctx.check_le("max_ratio_deviation", worst, 1e-9);
        } else {
            ctx.check_true("non_decreasing", prof.non_decreasing);
            ctx.check_ge("min_ratio", prof.min_ratio, 1.0);
        }
        return;
    }
    const auto chart = chart::chart_by_name(target);
    const auto prof = chart::volume_ratio_profile(chart, chart::base_point(chart), radii);
    CsvWriter csv({"radius", "volume", "ratio"});
    for (size_t i = 0; i < prof.radii.size(); ++i) csv.row({num(prof.radii[i]), num(prof.volumes[i]), num(prof.ratios[i])});
    ctx.write("profile.csv", csv.str());
    ctx.write("profile.svg", line_plot("volume ratio " + target, "r", "vol / r^4", {{target, prof.radii, prof.ratios}}));
    if (target == "flat") {
        double worst = 0.0;
        for (double q : prof.ratios) worst = std::max(worst, std::abs(q - kPi * kPi / 2));
        ctx.check_le("max_ratio_deviation", worst, 1e-6);
    } else if (target == "s4") {
        ctx.check_true("strictly_decreasing", prof.strictly_decreasing);
    } else {
        ctx.check_true("strictly_increasing", prof.strictly_increasing);
    }
}

// ---------------------------------------------------------------- regularity

void regularity(RunContext& ctx)
{
    const std::string target = ctx.config().target();
    const double r = ctx.config().number("r");
    CsvWriter csv({"probe", "radius", "energy", "peak"});

    if (target == "catenoid" || target == "plane" || target == "enneper") {
        const auto patch = target == "catenoid" ? surface::catenoid_patch(2.0) : surface::patch_by_name(target);
        const auto local = decomposition::choi_schoen_probe(patch, {0.0, 0.0}, r);
        csv.row({"choi_schoen_centre", num(r), num(local.energy), num(local.peak)});
        const double simons = decomposition::simons_residual(patch);
        ctx.check_le("simons_residual", simons, 1e-4);
        if (target == "plane") {
            ctx.check_abs("energy", local.energy, 0.0, 0.0);
            ctx.check_abs("peak", local.peak, 0.0, 0.0);
        }
        if (target == "catenoid") {
            // sup |A|^2 = 2 at the neck.
            ctx.check_abs("neck_peak", local.peak, 2.0 * (r / 2) * (r / 2), 1e-9);
            // Whole truncation |v| <= 1: a ball that contains everything.
            const auto whole = decomposition::choi_schoen_probe(surface::catenoid_patch(1.0), {kPi, 0.0}, 10.0);
            csv.row({"choi_schoen_whole", "10", num(whole.energy), num(whole.peak)});
            ctx.check_abs("whole_energy_relative", whole.energy / (8 * kPi * std::tanh(1.0)), 1.0, 1e-2);
        }
        CsvWriter s({"check", "value"});
        s.row({"simons_residual", num(simons)});
        ctx.write("simons.csv", s.str());
    } else {
        const auto chart = chart::chart_by_name(target);
        const auto p = chart::base_point(chart);
        const auto probe = chart::regularity_probe(chart, p, r);
        csv.row({"einstein_regularity", num(r), num(probe.energy), num(probe.peak)});
        if (target == "flat") ctx.check_abs("energy", probe.energy, 0.0, 0.0);
        else ctx.check_abs("energy_relative", probe.energy / (24 * space_form_ball(target == "s4" ? 1 : -1, r)), 1.0, 1e-2);
    }
    ctx.write("probes.csv", csv.str());
}

// ---------------------------------------------------------------- decompose

std::vector<std::vector<decomposition::Label>> relabel_ladder(const decomposition::DecompositionLabels& d,
                                                              const std::vector<double>& thresholds)
{
    std::vector<std::vector<decomposition::Label>> out;
    for (double t : thresholds) out.push_back(decomposition::relabel(d, t).labels);
    return out;
}

// Raising the threshold never turns `stays` into anything else.
bool monotone(const std::vector<std::vector<decomposition::Label>>& ladder, decomposition::Label stays)
{
    for (size_t i = 1; i < ladder.size(); ++i)
        for (size_t j = 0; j < ladder[i].size(); ++j)
            if (ladder[i - 1][j] == stays && ladder[i][j] != stays) return false;
    return true;
}

void write_ladder(RunContext& ctx, const decomposition::DecompositionLabels& d, const std::vector<double>& thresholds)
{
    const auto ladder = relabel_ladder(d, thresholds);
    CsvWriter csv({"threshold", "sample_id", "label"});
    for (size_t i = 0; i < ladder.size(); ++i)
        for (size_t j = 0; j < ladder[i].size(); ++j)
            csv.row({num(thresholds[i]), std::to_string(j), decomposition::to_string(ladder[i][j])});
    ctx.write("threshold_ladder.csv", csv.str());
}

void topology(RunContext& ctx)
{
    CsvWriter gb({"mesh", "total_curvature", "euler", "expected"});
    const std::vector<std::tuple<std::string, surface::TriangleMesh, int>> meshes{
        {"sphere", surface::icosphere(2), 2},
        {"torus", surface::triangulate(surface::torus_patch(), 48, 24, true, true), 0},
        {"genus2", surface::double_torus_mesh(), -2}};
    for (const auto& [name, mesh, chi] : meshes) {
        const auto r = decomposition::gauss_bonnet_mesh(mesh);
        gb.row({name, num(r.total_curvature), std::to_string(r.euler), std::to_string(chi)});
        ctx.check_abs(name + "_euler", r.euler, chi, 0);
        ctx.check_abs(name + "_total_curvature", r.total_curvature, 2 * kPi * chi, 1e-9);
    }
    ctx.write("gauss_bonnet.csv", gb.str());

    CsvWriter ht({"signature", "euler", "verdict"});
    const std::vector<std::tuple<int, int, bool>> cases{{0, 2, true}, {1, 3, true}, {5, 3, false}};
    for (const auto& [tau, chi, expect] : cases) {
        const bool ok = chart::hitchin_thorpe({tau, chi, std::nullopt});
        ht.row({std::to_string(tau), std::to_string(chi), ok ? "pass" : "fail"});
        ctx.check_true(fmt::format("hitchin_thorpe_{}_{}", tau, chi), ok == expect);
    }
    ctx.write("hitchin_thorpe.csv", ht.str());
}

void decompose(RunContext& ctx)
{
    const auto& c = ctx.config();
    const std::string target = c.target();
    if (target == "topology") return topology(ctx);
    std::mt19937_64 rng(ctx.seed());
    const long n = c.integer("samples");

    if (target == "plane" || target == "catenoid") {
        const double r = c.number("r"), n0 = c.number("n0");
        std::vector<surface::Vec2> samples;
        surface::ParametricPatch patch = surface::plane_patch(2.0);
        if (target == "plane") {
            std::uniform_real_distribution<double> U(-0.5, 0.5);
            for (long i = 0; i < n; ++i) samples.emplace_back(U(rng), U(rng));
        } else {
            patch = surface::catenoid_patch(3.0);
            samples = {{0.0, 0.0}, {1.0, 2.0}}; // neck and far sheet
        }
        const auto d = decomposition::sheeted_decomposition(patch, r, n0, samples);
        ctx.write("labels.csv", decomposition::labels_csv(d));
        const std::vector<double> ladder{0.5, 1.0, 2.0, 3.0, 3.5, 4.0, 8.0, 16.0};
        write_ladder(ctx, d, ladder);
        ctx.check_true("idempotent", decomposition::relabel(d, n0).labels == d.labels);
        ctx.check_true("monotone_in_n0", monotone(relabel_ladder(d, ladder), decomposition::Label::Sheeted));
        if (target == "plane") {
            const auto expect = kPi <= n0 ? decomposition::Label::Sheeted : decomposition::Label::NonSheeted;
            ctx.check_abs("matching_labels", static_cast<double>(d.count(expect)), static_cast<double>(samples.size()), 0);
            double worst = 0.0;
            for (double s : d.scales) worst = std::max(worst, std::abs(s - r));
            ctx.check_abs("scale_deviation", worst, 0.0, 0.0);
            ctx.check_true("rerun_identical", decomposition::sheeted_decomposition(patch, r, n0, samples).labels == d.labels);
        }
        return;
    }

    const double eps = c.number("eps"), V0 = c.number("v0");
    const auto chart = target == "flat_torus" ? chart::flat_torus_chart(4, c.number("side")) : chart::chart_by_name(target);
    const chart::Vec centre = chart::base_point(chart);
    std::uniform_real_distribution<double> U(-0.3, 0.3);
    std::vector<chart::Vec> samples;
    for (long i = 0; i < n; ++i) {
        chart::Vec q = centre;
        for (int a = 0; a < q.size(); ++a) q[a] += U(rng);
        samples.push_back(q);
    }
    const auto d = decomposition::thick_thin(chart, eps, V0, samples);
    ctx.write("labels.csv", decomposition::labels_csv(d));
    const std::vector<double> ladder{0.5, 1.0, 2.0, 4.0, 4.9, 5.0, 6.0, 10.0};
    write_ladder(ctx, d, ladder);
    ctx.check_true("idempotent", decomposition::relabel(d, V0).labels == d.labels);
    ctx.check_true("monotone_in_V0", monotone(relabel_ladder(d, ladder), decomposition::Label::Thin));

    size_t agree = 0;
    double worst = 0.0;
    for (size_t i = 0; i < samples.size(); ++i) {
        double vol = 0.0, scale = 1.0;
        if (target == "s4") {
            // Every point of the round sphere has 24 Vol(B(r)) energy at radius r.
            scale = 24 * space_form_ball(1, 1.0) <= eps ? 1.0 : root([&](double x) { return 24 * space_form_ball(1, x) - eps; }, 1e-6, 1.0);
            vol = space_form_ball(1, scale);
            worst = std::max(worst, std::abs(d.scales[i] / scale - 1.0));
        } else {
            vol = space_form_ball(0, 1.0);
        }
        const auto expect = vol > V0 * std::pow(scale, 4) ? decomposition::Label::Thick : decomposition::Label::Thin;
        if (d.labels[i] == expect) ++agree;
        worst = std::max(worst, std::abs(d.measures[i] / vol - 1.0));
    }
    ctx.check_abs("matching_labels", static_cast<double>(agree), static_cast<double>(samples.size()), 0);
    ctx.check_le("max_relative_scale_or_volume_error", worst, target == "s4" ? 1e-3 : 1e-6);
}

// ---------------------------------------------------------------- einstein-check

void einstein_check(RunContext& ctx)
{
    const auto& c = ctx.config();
    const std::string target = c.target();
    const auto chart = chart::chart_by_name(target);
    const bool control = target == "perturbed" || target == "bump";
    const std::map<std::string, double> lambda{{"flat", 0.0}, {"flat_torus", 0.0}, {"s4", 3.0}, {"fubini_study", 6.0},
                                               {"s2xs2", 1.0}, {"hyperbolic", -3.0}};

    std::mt19937_64 rng(ctx.seed());
    std::uniform_real_distribution<double> U(-0.2, 0.2);
    std::vector<chart::Vec> points{chart::base_point(chart)};
    for (long i = 0; i < c.integer("samples"); ++i) {
        chart::Vec q = points.front();
        for (int a = 0; a < q.size(); ++a) q[a] += U(rng);
        points.push_back(q);
    }

    CsvWriter csv({"sample_id", "x0", "x1", "x2", "x3", "lambda", "residual", "normalized", "bianchi", "rm_norm2", "nabla_rm"});
    double worst_norm = 0.0, least_norm = std::numeric_limits<double>::infinity(), worst_bianchi = 0.0;
    double worst_lambda = 0.0, worst_rm = 0.0, worst_nabla = 0.0, least_nabla = least_norm;
    double lambda_hat = 0.0, rm_norm2 = 0.0;
    for (size_t i = 0; i < points.size(); ++i) {
        const auto& x = points[i];
        const auto pack = chart::curvature_at(chart, x);
        const auto e = chart::einstein_residual(chart, x);
        const double nabla = chart::nabla_rm_norm(chart, x);
        csv.row({std::to_string(i), num(x[0]), num(x[1]), num(x[2]), num(x[3]), num(e.lambda), num(e.residual),
                 num(e.normalized), num(pack.bianchi_residual), num(pack.rm_norm2), num(nabla)});
        if (i == 0) lambda_hat = e.lambda, rm_norm2 = pack.rm_norm2;
        worst_norm = std::max(worst_norm, e.normalized);
        least_norm = std::min(least_norm, e.normalized);
        worst_bianchi = std::max(worst_bianchi, pack.bianchi_residual);
        worst_nabla = std::max(worst_nabla, nabla);
        least_nabla = std::min(least_nabla, nabla);
        if (!control) worst_lambda = std::max(worst_lambda, std::abs(e.lambda - lambda.at(target)));
        if (target == "s4") worst_rm = std::max(worst_rm, std::abs(pack.rm_norm2 - 24.0));
    }
    ctx.write("curvature.csv", csv.str());

    ctx.check_le("bianchi_residual", worst_bianchi, 1e-6);
    if (control) {
        ctx.check_ge("min_normalized_residual", least_norm, 1e-2);
        if (target == "bump") ctx.check_ge("min_nabla_rm", least_nabla, 1e-1);
    } else {
        ctx.check_abs("lambda_hat", lambda_hat, lambda.at(target), 1e-4);
        ctx.check_le("max_lambda_deviation", worst_lambda, 1e-4);
        ctx.check_le("normalized_residual", worst_norm, target == "fubini_study" ? 1e-4 : 1e-5);
        ctx.check_le("nabla_rm", worst_nabla, 1e-3);
    }
    if (target == "s4") {
        ctx.check_abs("rm_norm2", rm_norm2, 24.0, 1e-3);
        ctx.check_le("max_rm_norm2_deviation", worst_rm, 1e-3);
    }

    if (c.flag("functional")) {
        const double eh = chart::einstein_hilbert(chart);
        const double scaled = chart::einstein_hilbert(chart.scaled(c.number("scale")));
        CsvWriter f({"functional", "scaled", "scale"});
        f.row({num(eh), num(scaled), c.get("scale")});
        ctx.write("einstein_hilbert.csv", f.str());
        ctx.check_le("scale_invariance", std::abs(scaled - eh), 1e-10 * std::max(1.0, std::abs(eh)));
        if (target == "s4") ctx.check_abs("s4_functional_relative", eh / 61.56, 1.0, 5e-3);
    }
}

// ---------------------------------------------------------------- veronese

void veronese_suite(RunContext& ctx)
{
    using namespace veronese;
    const auto& c = ctx.config();
    const long n = c.integer("samples");
    std::mt19937_64 rng(ctx.seed());
    std::normal_distribution<double> N;

    double lift_norm = 0.0, horizontal = 0.0, affine = 0.0, hopf = 0.0, projector = 0.0;
    for (long i = 0; i < n; ++i) {
        const ProjPoint p = random_point(rng);
        const CVec l = veronese_lift(p);
        lift_norm = std::max(lift_norm, std::abs(l.norm() - 1.0));
        const Eigen::Vector4d v(N(rng), N(rng), N(rng), N(rng));
        horizontal = std::max(horizontal, horizontality_residual(p, v));
        affine = std::max(affine, horizontality_residual(p, v, Gauge::Affine));
        hopf = std::max(hopf, (hopf_project(l).rep() - veronese::veronese(p).rep()).norm());
        projector = std::max(projector, std::abs(projector_immersion(p).norm() - 1.0));
    }

    const auto fs = fs_chart();
    const auto x = projector_map();
    const chart::Vec o = chart::Vec::Zero(4);
    const auto fit_pts = chart_samples(fs, static_cast<int>(c.integer("fit_samples")), 0.8, ctx.seed(), o);
    const auto stats = pullback_stats(x, fs, fit_pts, unit_directions(4, 4, ctx.seed() + 1));
    const auto tk = takahashi_certify(x, fs, fit_pts);

    const std::vector<Check> checks{
        {"lift_norm_deviation", lift_norm, 0.0, 1e-12},
        {"horizontality_residual", horizontal, 0.0, 1e-10},
        {"hopf_lift_vs_veronese", hopf, 0.0, 1e-14},
        {"projector_norm_deviation", projector, 0.0, 1e-12},
        {"pullback_ratio", stats.mean, 3.0, 1e-6},
        {"pullback_ratio_cv", stats.cv, 0.0, 1e-6},
        {"lambda_fit", tk.lambda_fit, 12.0, 0.24},
        {"fit_residual", tk.residual, 0.0, 1e-6},
        {"radius_check", tk.radius_check, 0.0, 1e-3},
        {"sphere_mean_curvature_residual", tk.normal_residual, 0.0, 1e-6},
    };
    for (const auto& k : checks) {
        if (k.expected == 0.0) ctx.check_le(k.name, k.value, k.tolerance);
        else ctx.check_abs(k.name, k.value, k.expected, k.tolerance);
    }
    ctx.write("certification.csv", certification_csv(checks));

    CsvWriter samples({"p0", "p1", "p2", "p3", "x0", "x1", "x2", "x3", "x4", "x5", "x6", "x7"});
    for (const auto& q : fit_pts) {
        const Eigen::VectorXd y = x(q);
        std::vector<std::string> row;
        for (int a = 0; a < 4; ++a) row.push_back(num(q[a]));
        for (Eigen::Index a = 0; a < y.size(); ++a) row.push_back(num(y[a]));
        samples.row(row);
    }
    ctx.write("immersion_samples.csv", samples.str());

    CsvWriter span({"probe", "rank", "gap"});
    const int span_samples = static_cast<int>(c.integer("span_samples"));
    const auto lift = span_rank_probe(span_samples, ctx.seed());
    const auto proj = projector_span_rank(span_samples, ctx.seed(), false);
    const auto aff = projector_span_rank(span_samples, ctx.seed(), true);
    span.row({"lift_real_span", std::to_string(lift.rank), num(lift.gap)});
    span.row({"projector_span", std::to_string(proj.rank), num(proj.gap)});
    span.row({"projector_affine_span", std::to_string(aff.rank), num(aff.gap)});
    ctx.write("span.csv", span.str());

    CsvWriter diag({"quantity", "value"});
    diag.row({"affine_gauge_horizontality", num(affine)});
    diag.row({"lambda_induced", num(tk.lambda_induced)});
    diag.row({"radius_expected", num(tk.radius_expected)});
    diag.row({"radius", num(tk.radius)});
    ctx.write("diagnostics.csv", diag.str());
}

// ---------------------------------------------------------------- report

void report(RunContext& ctx)
{
    const auto rows = report_index(ctx.config().get("results"));
    const std::string table = index_csv(rows);
    std::cout << table;
    ctx.write("index.csv", table);
}

std::vector<CommandSpec> build()
{
    const std::string all_charts_radii = "0.1,0.2,0.3,0.4,0.5,0.6,0.7,0.8";
    return {
        {"verify-minimal", "minimal surface residuals on the catalog",
         {"all", "catenoid", "enneper", "bour", "plane", "helicoid", "scherk"},
         {{"target", "all"}, {"samples", "1000"}},
         verify_minimal},
        {"mcf", "mean curvature flow of the unit sphere",
         {"sphere"},
         {{"target", "sphere"}, {"dt", "1e-4"}, {"t_end", "0.1"}, {"level", "3"}, {"scheme", "explicit"}},
         mcf},
        {"ricci", "Ricci flow on finite-dimensional metric families",
         {"s4", "flat_torus", "s2xs2", "perturbed"},
         {{"target", "s4"}, {"dt", "0.01"}, {"t_end", "0.1"}, {"normalized", "false"}, {"theta", "auto"}},
         ricci},
        {"spectrum", "Jacobi and Lichnerowicz spectra",
         {"disk", "catenoid", "transition", "lichnerowicz"},
         {{"target", "disk"}, {"k", "6"}, {"nu", "0"}, {"nv", "0"}, {"a", "2.0"}, {"lo", "0.8"}, {"hi", "1.6"},
          {"side", "1.0"}, {"cutoff", "2"}},
         spectrum},
        {"monotonicity", "area and volume ratio profiles",
         {"plane", "catenoid", "flat", "s4", "hyperbolic"},
         {{"target", "catenoid"}, {"radii", all_charts_radii}},
         monotonicity},
        {"regularity", "Choi-Schoen, Simons and Einstein regularity probes",
         {"catenoid", "plane", "enneper", "s4", "flat", "hyperbolic"},
         {{"target", "catenoid"}, {"r", "0.5"}},
         regularity},
        {"decompose", "sheeted and thick-thin decompositions, topology checks",
         {"plane", "catenoid", "flat_torus", "flat", "s4", "topology"},
         {{"target", "plane"}, {"samples", "3"}, {"r", "0.5"}, {"n0", "4"}, {"eps", "1"}, {"v0", "1"}, {"side", "3"}},
         decompose},
        {"einstein-check", "curvature oracle, Einstein residual and functional",
         {"flat", "flat_torus", "s4", "fubini_study", "s2xs2", "hyperbolic", "perturbed", "bump"},
         {{"target", "s4"}, {"samples", "2"}, {"functional", "false"}, {"scale", "2.5"}},
         einstein_check},
        {"veronese", "Veronese immersion certification",
         {"cp2"},
         {{"target", "cp2"}, {"samples", "1000"}, {"fit_samples", "40"}, {"span_samples", "1000"}},
         veronese_suite},
        {"report", "index of the runs below a results directory",
         {"all"},
         {{"target", "all"}, {"results", "results"}},
         report},
    };
}

} // namespace

RunContext::RunContext(ExperimentConfig config, std::filesystem::path dir)
    : config_(std::move(config)), dir_(std::move(dir))
{
}

void RunContext::write(const std::string& name, const std::string& content)
{
    const auto path = dir_ / name;
    {
        std::ofstream f(path, std::ios::binary | std::ios::trunc);
        if (!f) throw Error(fmt::format("cannot write '{}'", path.string()));
        f << content;
        if (!f.flush()) throw Error(fmt::format("cannot write '{}'", path.string()));
    }
    for (auto& a : artifacts_)
        if (a.path == name) {
            a.sha256 = sha256_hex(content);
            return;
        }
    artifacts_.push_back({name, sha256_hex(content)});
}

void RunContext::check_abs(const std::string& name, double value, double expected, double tol)
{
    checks_.push_back({name, value, expected, tol, "abs", std::abs(value - expected) <= tol});
}

void RunContext::check_le(const std::string& name, double value, double bound)
{
    checks_.push_back({name, value, bound, 0.0, "le", value <= bound});
}

void RunContext::check_ge(const std::string& name, double value, double bound)
{
    checks_.push_back({name, value, bound, 0.0, "ge", value >= bound});
}

void RunContext::check_true(const std::string& name, bool ok)
{
    checks_.push_back({name, ok ? 1.0 : 0.0, 1.0, 0.0, "abs", ok});
}

const std::vector<CommandSpec>& commands()
{
    static const std::vector<CommandSpec> all = build();
    return all;
}

const CommandSpec* find_command(const std::string& name)
{
    for (const auto& c : commands())
        if (c.name == name) return &c;
    return nullptr;
}

std::string checks_csv(const std::vector<CheckResult>& checks)
{
    CsvWriter csv({"name", "value", "expected", "tolerance", "comparison", "pass"});
    for (const auto& c : checks)
        csv.row({c.name, num(c.value), num(c.expected), num(c.tolerance), c.comparison, c.pass ? "true" : "false"});
    return csv.str();
}

} // namespace geolab::cli
