#include <geolab/chart/catalog.hpp>
#include <geolab/common/error.hpp>
#include <geolab/veronese/hermitian.hpp>
#include <geolab/veronese/immersion.hpp>

#include <cmath>
#include <random>

namespace geolab::veronese {

chart::MetricChart fs_chart() { return chart::fubini_study_chart(); }

Immersion projector_map()
{
    return [](const chart::Vec& x) -> Eigen::VectorXd { return projector_immersion(from_chart(x)).coords(); };
}

double pullback_inner(const Immersion& map, const chart::Vec& x, const chart::Vec& v, const chart::Vec& w, double h)
{
    const Eigen::VectorXd dv = (map(x + h * v) - map(x - h * v)) / (2 * h);
    const Eigen::VectorXd dw = (map(x + h * w) - map(x - h * w)) / (2 * h);
    return dv.dot(dw);
}

std::optional<double> pullback_ratio(const Immersion& map, const chart::MetricChart& chart, const chart::Vec& x,
                                     const chart::Vec& v, const chart::Vec& w, double h, double guard)
{
    const double gvw = v.dot(chart.metric(x) * w);
    if (std::abs(gvw) <= guard * v.norm() * w.norm()) return std::nullopt;
    return pullback_inner(map, x, v, w, h) / gvw;
}

RatioStats pullback_stats(const Immersion& map, const chart::MetricChart& chart, const std::vector<chart::Vec>& points,
                          const std::vector<chart::Vec>& directions)
{
    std::vector<double> r;
    for (const auto& x : points)
        for (const auto& v : directions)
            if (auto q = pullback_ratio(map, chart, x, v, v)) r.push_back(*q);
    if (r.empty()) throw Error("no admissible pullback samples");
    RatioStats s;
    s.count = static_cast<int>(r.size());
    for (double q : r) s.mean += q / s.count;
    double var = 0.0;
    for (double q : r) var += (q - s.mean) * (q - s.mean) / s.count;
    s.cv = std::sqrt(var) / std::abs(s.mean);
    return s;
}

std::vector<chart::Vec> chart_samples(const chart::MetricChart& chart, int count, double spread, uint64_t seed,
                                      const chart::Vec& centre)
{
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> N(0.0, spread);
    std::vector<chart::Vec> out;
    int attempts = 0;
    while (static_cast<int>(out.size()) < count) {
        if (++attempts > 1000 * count) throw Error("could not place samples inside the chart");
        chart::Vec x = centre;
        for (int k = 0; k < x.size(); ++k) x[k] += N(rng);
        if (chart.box().contains(x, 0.05)) out.push_back(x);
    }
    return out;
}

std::vector<chart::Vec> unit_directions(int dim, int count, uint64_t seed)
{
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> N;
    std::vector<chart::Vec> out;
    for (int i = 0; i < count; ++i) {
        chart::Vec v(dim);
        for (int k = 0; k < dim; ++k) v[k] = N(rng);
        out.push_back(v / v.norm());
    }
    return out;
}

} // namespace geolab::veronese
