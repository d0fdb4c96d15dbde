#include <geolab/common/csv.hpp>
#include <geolab/common/error.hpp>
#include <geolab/veronese/hermitian.hpp>
#include <geolab/veronese/takahashi.hpp>

#include <Eigen/SVD>
#include <fmt/core.h>

#include <cmath>
#include <limits>

namespace geolab::veronese {

namespace {

struct Fit {
    double lambda = 0.0;
    double residual = 0.0;
    double normal = 0.0;
};

Fit fit_eigenvalue(const Immersion& x, const chart::MetricChart& chart, const std::vector<chart::Vec>& samples)
{
    std::vector<Eigen::VectorXd> X, L;
    double num = 0.0, den = 0.0;
    for (const auto& s : samples) {
        X.push_back(x(s));
        L.push_back(chart::laplace_beltrami(chart, x, s));
        num += L.back().dot(X.back());
        den += X.back().squaredNorm();
    }
    if (!(den > 1e-24)) throw IllConditioned("immersion vanishes on the samples");
    Fit f;
    f.lambda = num / den;
    double r2 = 0.0, s2 = 0.0;
    for (size_t i = 0; i < X.size(); ++i) {
        r2 += (L[i] - f.lambda * X[i]).squaredNorm();
        s2 += (f.lambda * X[i]).squaredNorm();
        const double ln = L[i].norm();
        if (ln > 0.0) {
            const Eigen::VectorXd perp = L[i] - L[i].dot(X[i]) / X[i].squaredNorm() * X[i];
            f.normal = std::max(f.normal, perp.norm() / ln);
        }
    }
    f.residual = s2 > 0.0 ? std::sqrt(r2 / s2) : std::numeric_limits<double>::infinity();
    return f;
}

} // namespace

TakahashiReport takahashi_certify(const Immersion& x, const chart::MetricChart& chart,
                                  const std::vector<chart::Vec>& samples)
{
    if (samples.empty()) throw Error("no samples");
    const Fit f = fit_eigenvalue(x, chart, samples);
    const RatioStats st = pullback_stats(x, chart, samples, unit_directions(chart.dim(), 4, 7));
    TakahashiReport r;
    r.samples = static_cast<int>(samples.size());
    r.lambda_fit = f.lambda;
    r.residual = f.residual;
    r.normal_residual = f.normal;
    r.ratio = st.mean;
    r.ratio_cv = st.cv;
    r.lambda_induced = f.lambda / st.mean;
    r.radius_expected = std::sqrt(chart.dim() / r.lambda_induced);
    for (const auto& s : samples) r.radius += x(s).norm() / static_cast<double>(samples.size());
    r.radius_check = std::abs(r.radius_expected - r.radius);
    return r;
}

Eigen::VectorXd Eigenmap::operator()(const chart::Vec& x) const
{
    Eigen::VectorXd out(static_cast<Eigen::Index>(basis.size()));
    for (size_t i = 0; i < basis.size(); ++i) out[static_cast<Eigen::Index>(i)] = scale * basis[i](x);
    return out;
}

Eigenmap eigenmap(const std::vector<ScalarFn>& basis, const chart::MetricChart& chart,
                  const std::vector<chart::Vec>& samples, double tol)
{
    if (basis.empty()) throw Error("empty eigenfunction basis");
    Eigenmap em;
    em.basis = basis;
    std::vector<double> lambdas;
    for (size_t i = 0; i < basis.size(); ++i) {
        const auto& fn = basis[i];
        const Immersion one = [&fn](const chart::Vec& x) { return Eigen::VectorXd::Constant(1, fn(x)); };
        const Fit f = fit_eigenvalue(one, chart, samples);
        if (f.residual > tol)
            throw Rejected(fmt::format("basis function {} is not a Laplace eigenfunction (fit residual {:.3g}); "
                                       "mixed eigenvalues", i, f.residual));
        lambdas.push_back(f.lambda);
    }
    for (double l : lambdas)
        if (std::abs(l - lambdas.front()) > tol * std::abs(lambdas.front()))
            throw Rejected(fmt::format("mixed eigenvalues {} and {}", lambdas.front(), l));
    em.lambda = lambdas.front();
    if (std::abs(em.lambda) <= tol) throw Rejected("eigenvalue zero: constant functions do not immerse");
    const Immersion raw = [&em](const chart::Vec& x) { return em(x); };
    const RatioStats st = pullback_stats(raw, chart, samples, unit_directions(chart.dim(), 4, 11));
    if (st.cv > tol) throw Rejected(fmt::format("pullback is not a constant multiple of g (cv {:.3g})", st.cv));
    em.scale = 1.0 / std::sqrt(st.mean);
    return em;
}

namespace {

SpanRank rank_of(const Eigen::MatrixXd& A)
{
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(A);
    SpanRank out;
    const auto& s = svd.singularValues();
    out.singular_values.assign(s.data(), s.data() + s.size());
    for (Eigen::Index i = 0; i < s.size(); ++i) out.rank += s[i] > 1e-8 * s[0] ? 1 : 0;
    out.gap = out.rank < s.size() ? (s[out.rank] > 0 ? s[out.rank - 1] / s[out.rank] : std::numeric_limits<double>::infinity())
                                  : std::numeric_limits<double>::infinity();
    return out;
}

} // namespace

SpanRank span_rank_probe(int samples, uint64_t seed)
{
    if (samples < 12) throw Error("span rank probe needs at least 12 samples");
    std::mt19937_64 rng(seed);
    Eigen::MatrixXd A(samples, 12);
    for (int i = 0; i < samples; ++i) {
        const CVec l = veronese_lift(random_point(rng));
        A.row(i).head(6) = l.real().transpose();
        A.row(i).tail(6) = l.imag().transpose();
    }
    return rank_of(A);
}

SpanRank projector_span_rank(int samples, uint64_t seed, bool affine)
{
    if (samples < 9) throw Error("projector span probe needs at least 9 samples");
    std::mt19937_64 rng(seed);
    Eigen::MatrixXd A(samples, 9);
    for (int i = 0; i < samples; ++i) {
        const CVec z = random_point(rng).rep();
        const Eigen::Matrix3cd P = z * z.adjoint();
        A.row(i) << P(0, 0).real(), P(1, 1).real(), P(2, 2).real(), P(0, 1).real(), P(0, 1).imag(), P(0, 2).real(),
            P(0, 2).imag(), P(1, 2).real(), P(1, 2).imag();
    }
    if (affine) A.rowwise() -= A.colwise().mean();
    return rank_of(A);
}

bool Check::pass() const { return std::abs(value - expected) <= tolerance; }

std::string certification_csv(const std::vector<Check>& checks)
{
    CsvWriter csv({"check", "value", "expected", "tolerance", "pass"});
    for (const auto& c : checks)
        csv.row({c.name, format_double(c.value), format_double(c.expected), format_double(c.tolerance),
                 c.pass() ? "true" : "false"});
    return csv.str();
}

} // namespace geolab::veronese
