// One PASS/FAIL line per acceptance criterion; a criterion also fails when
// it exceeds its runtime budget.

#include <geolab/chart/catalog.hpp>
#include <geolab/chart/curvature.hpp>
#include <geolab/chart/functionals.hpp>
#include <geolab/chart/geodesic.hpp>
#include <geolab/chart/topology.hpp>
#include <geolab/cli/runner.hpp>
#include <geolab/decomposition/decompose.hpp>
#include <geolab/decomposition/gauss_bonnet.hpp>
#include <geolab/decomposition/monotonicity.hpp>
#include <geolab/decomposition/probes.hpp>
#include <geolab/flow/mcf.hpp>
#include <geolab/flow/ricci.hpp>
#include <geolab/spectra/jacobi.hpp>
#include <geolab/spectra/lichnerowicz.hpp>
#include <geolab/surface/catalog.hpp>
#include <geolab/surface/discrete_curvature.hpp>
#include <geolab/surface/forms.hpp>
#include <geolab/surface/mesh.hpp>
#include <geolab/veronese/hermitian.hpp>
#include <geolab/veronese/immersion.hpp>
#include <geolab/veronese/projective.hpp>
#include <geolab/veronese/takahashi.hpp>

#include <fmt/core.h>

#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <limits>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace surface = geolab::surface;
namespace chart = geolab::chart;
namespace flow = geolab::flow;
namespace spectra = geolab::spectra;
namespace dec = geolab::decomposition;
namespace ver = geolab::veronese;
namespace cli = geolab::cli;

namespace {

constexpr double kPi = std::numbers::pi;

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

double s4_ball(double r) { return 2 * kPi * kPi * (2.0 / 3.0 - std::cos(r) + std::pow(std::cos(r), 3) / 3.0); }

chart::Vec vec4(double a, double b, double c, double d)
{
    chart::Vec v(4);
    v << a, b, c, d;
    return v;
}

// Collects the individual conditions of one criterion.
struct Verdict {
    bool pass = true;
    std::vector<std::string> notes;

    void require(bool ok, const std::string& what)
    {
        pass = pass && ok;
        notes.push_back((ok ? "" : "!") + what);
    }
    void info(const std::string& what) { notes.push_back("(" + what + ")"); }
};

std::string g(double x) { return fmt::format("{:.6g}", x); }

// ---------------------------------------------------------------- criteria

Verdict minimality()
{
    Verdict v;
    std::mt19937_64 rng(1);
    for (const std::string name : {"catenoid", "enneper", "bour", "plane"}) {
        const auto patch = surface::patch_by_name(name);
        const auto& d = patch.domain();
        std::uniform_real_distribution<double> U(d.u0 + 0.01 * d.span_u(), d.u1 - 0.01 * d.span_u());
        std::uniform_real_distribution<double> V(d.v0 + 0.01 * d.span_v(), d.v1 - 0.01 * d.span_v());
        double worst = 0.0;
        for (int i = 0; i < 1000; ++i) worst = std::max(worst, std::abs(surface::evaluate_forms(patch, U(rng), V(rng)).H));
        v.require(worst <= 1e-10, name + " |H| " + g(worst));
    }
    const auto scherk = surface::scherk_graph();
    std::uniform_real_distribution<double> X(scherk.domain.u0, scherk.domain.u1), Y(scherk.domain.v0, scherk.domain.v1);
    double worst = 0.0;
    for (int i = 0; i < 1000; ++i) worst = std::max(worst, std::abs(surface::msq_residual(scherk, X(rng), Y(rng))));
    v.require(worst <= 1e-8, "scherk msq " + g(worst));
    return v;
}

Verdict discrete_convergence()
{
    Verdict v;
    std::vector<double> err;
    for (int level = 2; level <= 4; ++level) err.push_back(surface::mesh_mean_curvature(surface::icosphere(level)).max_error(1.0));
    for (size_t i = 0; i + 1 < err.size(); ++i) {
        // Each icosphere level halves the edge length.
        const double order = std::log2(err[i] / err[i + 1]);
        v.require(order >= 1.7, fmt::format("order L{}-L{} {}", i + 2, i + 3, g(order)));
    }
    return v;
}

Verdict mcf_shrinker()
{
    Verdict v;
    const auto traj = flow::mcf_run(surface::icosphere(3), 1e-4, 0.1);
    const double t = traj.times.back();
    const double r = flow::mean_radius(traj.states.back());
    v.require(std::abs(t - 0.1) < 5e-5, "t_end " + g(t));
    v.require(std::abs(r - std::sqrt(1 - 2 * t)) <= 1e-3, "radius error " + g(std::abs(r - std::sqrt(1 - 2 * t))));
    bool monotone = true;
    for (size_t i = 1; i < traj.size(); ++i) monotone = monotone && traj.measure[i] <= traj.measure[i - 1];
    v.require(monotone, fmt::format("area non-increasing over {} states", traj.size()));
    return v;
}

Verdict ricci_flow()
{
    Verdict v;
    const auto s4 = flow::ricci_flow_family(flow::s4_scale_family(), flow::Params::Constant(1, 1.0), 0.01, 0.1);
    v.require(std::abs(s4.states.back()[0] - 0.4) <= 1e-4, "s(0.1) " + g(s4.states.back()[0]));
    flow::Params theta(4);
    theta << 1.0, 2.0, 3.0, 4.0;
    const auto torus = flow::ricci_flow_family(flow::flat_torus_family(), theta, 0.1, 1.0);
    v.require(torus.states.back() == theta, "flat torus stationary");
    const auto norm = ricci_flow_family(flow::s4_scale_family(), flow::Params::Constant(1, 1.0), 0.01, 1.0, true);
    double drift = 0.0;
    for (const auto& s : norm.states) drift = std::max(drift, std::abs(s[0] - 1.0));
    v.require(drift <= 1e-6, "normalized drift " + g(drift));
    return v;
}

Verdict morse_index()
{
    Verdict v;
    const double j01 = bisect([](double x) { return std::cyl_bessel_j(0.0, x); }, 2.0, 3.0);
    const auto disk = surface::disk_patch();
    const auto dr = spectra::jacobi_spectrum(spectra::assemble_jacobi(disk, surface::triangulate(disk, 40, 96, false, true)), 4);
    v.require(std::abs(dr.eigenvalues[0] / (j01 * j01) - 1) <= 1e-2, "disk lambda1 " + g(dr.eigenvalues[0]) + " vs " + g(j01 * j01));
    v.require(dr.index == 0, fmt::format("disk index {}", dr.index));
    for (const auto& [a, expect] : {std::pair{0.5, 0}, std::pair{2.0, 1}}) {
        const auto rep = spectra::jacobi_spectrum(
            spectra::assemble_jacobi(surface::catenoid_patch(a), spectra::catenoid_mesh(a, 32, 24)), 6);
        v.require(rep.index == expect, fmt::format("catenoid a={} index {}", a, rep.index));
    }
    const double a_star = bisect([](double a) { return a * std::tanh(a) - 1.0; }, 0.5, 2.0);
    const auto tr = spectra::locate_catenoid_transition(0.8, 1.6, 32, 24);
    v.require(std::abs(tr.a / a_star - 1) <= 2e-2, "transition " + g(tr.a) + " vs " + g(a_star));
    return v;
}

Verdict lichnerowicz()
{
    Verdict v;
    const auto L = spectra::lichnerowicz_torus_spectrum(1.0, 2);
    const double tol = L.report.tol_neg;
    int zeros = 0;
    double first = std::numeric_limits<double>::infinity();
    for (double l : L.report.eigenvalues) {
        if (std::abs(l) <= tol) ++zeros;
        else if (l > 0) first = std::min(first, l);
    }
    v.require(zeros == 9, fmt::format("zero multiplicity {}", zeros));
    v.require(std::abs(first - 4 * kPi * kPi) <= 1e-9, "first positive " + g(first));
    bool dims = true;
    for (const auto& m : L.modes) dims = dims && (m.k.isZero() || m.dim() == 5);
    v.require(dims, fmt::format("TT dimension 5 on {} nonzero modes", L.modes.size() - 1));
    v.require(L.report.index == 0, fmt::format("index {}", L.report.index));
    return v;
}

Verdict curvature_oracle()
{
    Verdict v;
    const auto s4 = chart::einstein_residual(chart::s4_chart(), chart::Vec::Zero(4));
    v.require(std::abs(s4.lambda - 3) < 1e-4 && s4.normalized < 1e-5, "S4 lambda " + g(s4.lambda) + " residual " + g(s4.normalized));
    const auto fs = chart::einstein_residual(chart::fubini_study_chart(), chart::Vec::Zero(4));
    v.require(std::abs(fs.lambda - 6) < 1e-4 && fs.normalized < 1e-4, "FS lambda " + g(fs.lambda) + " residual " + g(fs.normalized));
    const double rm = chart::curvature_at(chart::s4_chart(), chart::Vec::Zero(4)).rm_norm2;
    v.require(std::abs(rm - 24) <= 1e-3, "|Rm|^2 " + g(rm));
    double bianchi = 0.0;
    for (const auto& name : chart::chart_names()) {
        const auto c = chart::chart_by_name(name);
        bianchi = std::max(bianchi, chart::curvature_at(c, chart::base_point(c)).bianchi_residual);
    }
    v.require(bianchi < 1e-6, "max Bianchi " + g(bianchi));
    const auto p = chart::perturbed_chart();
    const auto pr = chart::einstein_residual(p, chart::base_point(p));
    v.require(pr.normalized > 1e-2, "perturbed residual " + g(pr.normalized));
    return v;
}

Verdict local_symmetry()
{
    Verdict v;
    for (const auto& [name, c] : {std::pair{"flat", chart::flat_chart()}, std::pair{"S4", chart::s4_chart()},
                                  std::pair{"FS", chart::fubini_study_chart()}}) {
        const double n = std::max(chart::nabla_rm_norm(c, chart::Vec::Zero(4)), chart::nabla_rm_norm(c, vec4(0.3, -0.2, 0.1, 0.4)));
        v.require(n < 1e-3, std::string(name) + " " + g(n));
    }
    const auto p = chart::perturbed_chart();
    double worst = 0.0;
    for (const auto& x : {chart::base_point(p), vec4(0.8, 0, 0, 0), vec4(-0.8, 0.5, 0, 0)})
        worst = std::max(worst, chart::nabla_rm_norm(p, x));
    v.require(worst > 1e-1, "perturbed " + g(worst));
    const auto bump = chart::bump_chart();
    v.info("bump " + g(chart::nabla_rm_norm(bump, chart::base_point(bump))));
    return v;
}

Verdict functionals()
{
    Verdict v;
    double worst = 0.0;
    for (const auto& name : chart::chart_names()) {
        const auto c = chart::chart_by_name(name);
        chart::IntegrationOptions opt;
        if (name == "bump") opt.nodes = 16; // narrow Gaussian profile
        const double a = chart::einstein_hilbert(c, opt);
        opt.check_convergence = false;
        const double b = chart::einstein_hilbert(c.scaled(2.5), opt);
        worst = std::max(worst, std::abs(a - b) / std::max(1.0, std::abs(a)));
    }
    v.require(worst <= 1e-10, "scale invariance " + g(worst));
    const double s4 = chart::einstein_hilbert(chart::s4_chart());
    // R = 12 and Vol = 8 pi^2 / 3 give 12 sqrt(Vol).
    const double expect = 12 * std::sqrt(8 * kPi * kPi / 3);
    v.require(std::abs(s4 / 61.56 - 1) <= 5e-3, "S4 " + g(s4) + " (closed form " + g(expect) + ")");
    return v;
}

Verdict monotonicity()
{
    Verdict v;
    std::vector<double> radii;
    for (int i = 1; i <= 8; ++i) radii.push_back(0.1 * i);
    const auto plane = dec::area_ratio_profile(surface::plane_patch(), {0.0, 0.0}, radii);
    double dev = 0.0;
    for (double q : plane.ratios) dev = std::max(dev, std::abs(q - 1));
    v.require(dev <= 1e-9, "plane deviation " + g(dev));
    const auto cat = dec::area_ratio_profile(surface::catenoid_patch(2.0), {0.0, 0.0}, radii);
    v.require(cat.non_decreasing && cat.min_ratio >= 1, "catenoid min ratio " + g(cat.min_ratio));
    const auto flat = chart::volume_ratio_profile(chart::flat_chart(), chart::Vec::Zero(4), {0.25, 0.5, 1.0, 2.0});
    dev = 0.0;
    for (double q : flat.ratios) dev = std::max(dev, std::abs(q - kPi * kPi / 2));
    v.require(dev <= 1e-6, "flat deviation " + g(dev));
    const std::vector<double> rr{0.2, 0.5, 0.8, 1.1, 1.5};
    v.require(chart::volume_ratio_profile(chart::s4_chart(), chart::Vec::Zero(4), rr).strictly_decreasing, "S4 decreasing");
    const auto hyp = chart::hyperbolic_chart();
    v.require(chart::volume_ratio_profile(hyp, chart::base_point(hyp), rr).strictly_increasing, "hyperbolic increasing");
    return v;
}

Verdict probes()
{
    Verdict v;
    const auto whole = dec::choi_schoen_probe(surface::catenoid_patch(1.0), {kPi, 0.0}, 10.0);
    const double expect = 8 * kPi * std::tanh(1.0);
    v.require(std::abs(whole.energy / expect - 1) <= 1e-2, "catenoid energy " + g(whole.energy) + " vs " + g(expect));
    const double r = 0.5;
    const auto reg = chart::regularity_probe(chart::s4_chart(), chart::Vec::Zero(4), r);
    v.require(std::abs(reg.energy / (24 * s4_ball(r)) - 1) <= 1e-2, "S4 energy " + g(reg.energy) + " vs " + g(24 * s4_ball(r)));
    return v;
}

Verdict decompositions()
{
    Verdict v;
    using dec::Label;
    const auto plane = surface::plane_patch(2.0);
    const std::vector<surface::Vec2> ps{{0.0, 0.0}, {0.3, -0.4}, {-0.5, 0.5}};
    const auto d4 = dec::sheeted_decomposition(plane, 0.5, 4.0, ps);
    const auto d3 = dec::sheeted_decomposition(plane, 0.5, 3.0, ps);
    v.require(d4.count(Label::Sheeted) == 3, "plane n0=4 sheeted");
    v.require(d3.count(Label::NonSheeted) == 3, "plane n0=3 non-sheeted");
    v.require(dec::sheeted_decomposition(plane, 0.5, 4.0, ps).labels == d4.labels, "plane re-run");

    const auto tchart = chart::flat_torus_chart(4, 3.0);
    const std::vector<chart::Vec> ts{vec4(0.5, 0.5, 0.5, 0.5), vec4(2.9, 0.1, 1.5, 2.2)};
    const auto torus = dec::thick_thin(tchart, 1.0, 1.0, ts);
    v.require(torus.count(Label::Thick) == 2, "T4 side 3 V0=1 thick");
    v.require(dec::thick_thin(tchart, 1.0, 1.0, ts).labels == torus.labels, "T4 re-run");
    const auto flat = dec::thick_thin(chart::flat_chart(), 1.0, 10.0, {vec4(0, 0, 0, 0), vec4(1, -1, 0.5, 0)});
    v.require(flat.count(Label::Thin) == 2, "flat V0=10 thin");
    const auto s4 = dec::thick_thin(chart::s4_chart(), 1.0, 1.0, {vec4(0, 0, 0, 0), vec4(0.3, -0.2, 0.1, 0.4)});
    v.require(s4.count(Label::Thick) == 2, "S4 eps=1 V0=1 thick");

    bool mono_v0 = true;
    for (const auto* d : {&torus, &flat, &s4})
        for (double V0 = 0.25; V0 < 40; V0 *= 1.5) {
            const auto lo = dec::relabel(*d, V0), hi = dec::relabel(*d, V0 * 1.5);
            for (size_t i = 0; i < lo.labels.size(); ++i) mono_v0 = mono_v0 && !(lo.labels[i] == Label::Thin && hi.labels[i] != Label::Thin);
        }
    v.require(mono_v0, "monotone in V0");

    const auto cat = dec::sheeted_decomposition(surface::catenoid_patch(3.0), 1.0, 4.0, {{0.0, 0.0}, {1.0, 2.0}});
    v.info("catenoid neck " + dec::to_string(cat.labels[0]) + " far " + dec::to_string(cat.labels[1]));
    bool mono_n0 = true;
    for (const auto* d : {&d4, &cat})
        for (double n0 = 0.25; n0 < 40; n0 *= 1.5) {
            const auto lo = dec::relabel(*d, n0), hi = dec::relabel(*d, n0 * 1.5);
            for (size_t i = 0; i < lo.labels.size(); ++i)
                mono_n0 = mono_n0 && !(lo.labels[i] == Label::Sheeted && hi.labels[i] != Label::Sheeted);
        }
    v.require(mono_n0, "monotone in n0");
    v.require(dec::relabel(cat, 4.0).labels == cat.labels && dec::relabel(s4, 1.0).labels == s4.labels, "relabel idempotent");
    return v;
}

Verdict topology()
{
    Verdict v;
    const int sphere = dec::gauss_bonnet_mesh(surface::icosphere(3)).euler;
    const int torus = dec::gauss_bonnet_mesh(surface::triangulate(surface::torus_patch(), 48, 24, true, true)).euler;
    const int genus2 = dec::gauss_bonnet_mesh(surface::double_torus_mesh()).euler;
    v.require(sphere == 2 && torus == 0 && genus2 == -2, fmt::format("chi {} {} {}", sphere, torus, genus2));
    const bool a = chart::hitchin_thorpe({0, 2, std::nullopt});
    const bool b = chart::hitchin_thorpe({1, 3, std::nullopt});
    const bool c = chart::hitchin_thorpe({5, 3, std::nullopt});
    v.require(a && b && !c, fmt::format("Hitchin-Thorpe {} {} {}", a, b, c));
    return v;
}

Verdict veronese_suite()
{
    Verdict v;
    std::mt19937_64 rng(7);
    std::normal_distribution<double> N;
    double lift = 0, horiz = 0, hopf = 0, proj = 0;
    for (int i = 0; i < 1000; ++i) {
        const ver::ProjPoint p = ver::random_point(rng);
        const ver::CVec l = ver::veronese_lift(p);
        lift = std::max(lift, std::abs(l.norm() - 1));
        horiz = std::max(horiz, ver::horizontality_residual(p, Eigen::Vector4d(N(rng), N(rng), N(rng), N(rng))));
        hopf = std::max(hopf, (ver::hopf_project(l).rep() - ver::veronese(p).rep()).norm());
        proj = std::max(proj, std::abs(ver::projector_immersion(p).norm() - 1));
    }
    v.require(lift <= 1e-12, "lift norm " + g(lift));
    v.require(horiz < 1e-10, "horizontality " + g(horiz));
    v.require(hopf < 1e-14, "hopf o lift vs veronese " + g(hopf));
    v.require(proj <= 1e-12, "projector norm " + g(proj));

    const auto fs = ver::fs_chart();
    const auto pts = ver::chart_samples(fs, 40, 0.8, 2, chart::Vec::Zero(4));
    const auto st = ver::pullback_stats(ver::projector_map(), fs, pts, ver::unit_directions(4, 4, 21));
    v.require(std::abs(st.mean - 3) < 1e-6 && st.cv < 1e-6, "pullback ratio " + g(st.mean) + " cv " + g(st.cv));
    const auto tk = ver::takahashi_certify(ver::projector_map(), fs, pts);
    v.require(std::abs(tk.lambda_fit / 12 - 1) <= 2e-2 && tk.residual < 1e-6,
              "lambda_fit " + g(tk.lambda_fit) + " residual " + g(tk.residual));
    v.require(std::abs(std::sqrt(4 / tk.lambda_induced) - 1) <= 1e-3, "radius " + g(std::sqrt(4 / tk.lambda_induced)));
    v.require(tk.normal_residual < 1e-6, "sphere mean curvature " + g(tk.normal_residual));
    return v;
}

std::string slurp(const std::filesystem::path& p)
{
    std::ifstream f(p, std::ios::binary);
    std::stringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

Verdict reproducibility()
{
    Verdict v;
    const auto root = std::filesystem::temp_directory_path() / "geolab_acceptance_rerun";
    std::filesystem::remove_all(root);
    int compared = 0;
    for (const auto& [sub, target] : {std::pair{"verify-minimal", "all"}, std::pair{"ricci", "s2xs2"},
                                      std::pair{"spectrum", "catenoid"}, std::pair{"veronese", "cp2"}}) {
        cli::ExperimentConfig c;
        c.set("subcommand", sub);
        c.set("target", target);
        c.set("seed", "2024");
        std::vector<cli::RunManifest> runs;
        for (const char* leg : {"a", "b"}) {
            c.set("out", (root / fmt::format("{}-{}", sub, leg)).string());
            runs.push_back(cli::run(c));
        }
        bool same = runs[0].config_hash == runs[1].config_hash;
        for (const auto& art : runs[0].artifacts) {
            if (art.path.size() < 4 || art.path.substr(art.path.size() - 4) != ".csv") continue;
            ++compared;
            same = same && slurp(root / fmt::format("{}-a", sub) / art.path) == slurp(root / fmt::format("{}-b", sub) / art.path);
        }
        v.require(same, std::string(sub) + " identical");
    }
    v.info(fmt::format("{} CSV pairs", compared));
    std::filesystem::remove_all(root);
    return v;
}

struct Criterion {
    int id;
    std::string name;
    double budget; // seconds
    std::function<Verdict()> run;
};

} // namespace

int main()
{
    const std::vector<Criterion> criteria{
        {1, "minimality certification", 5, minimality},
        {2, "discrete convergence", 30, discrete_convergence},
        {3, "MCF shrinker law", 60, mcf_shrinker},
        {4, "Ricci flow", 10, ricci_flow},
        {5, "Morse index", 120, morse_index},
        {6, "Lichnerowicz torus", 5, lichnerowicz},
        {7, "curvature oracle", 30, curvature_oracle},
        {8, "local symmetry", 30, local_symmetry},
        {9, "functionals", 20, functionals},
        {10, "monotonicity", 60, monotonicity},
        {11, "probes", 30, probes},
        {12, "decompositions", 120, decompositions},
        {13, "topology", 5, topology},
        {14, "Veronese suite", 60, veronese_suite},
        {15, "reproducibility", 5, reproducibility},
    };
    int failed = 0;
    for (const auto& c : criteria) {
        const auto t0 = std::chrono::steady_clock::now();
        Verdict v;
        try {
            v = c.run();
        } catch (const std::exception& e) {
            v.require(false, std::string("threw: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        v.require(secs < c.budget, fmt::format("{:.2f} s < {} s", secs, c.budget));
        std::string detail;
        for (const auto& n : v.notes) detail += (detail.empty() ? "" : "; ") + n;
        fmt::print("{} {:2d} {}: {}\n", v.pass ? "PASS" : "FAIL", c.id, c.name, detail);
        std::fflush(stdout);
        failed += !v.pass;
    }
    fmt::print("{} of {} criteria passed\n", criteria.size() - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
