#pragma once

#include <geolab/chart/metric_chart.hpp>

#include <string>
#include <vector>

namespace geolab::chart {

/// Standard J on R^{2m}: multiplication by i on pairs (x_{2k}, x_{2k+1}).
Mat standard_complex_structure(int n);

MetricChart flat_chart(int n = 4, double half = 4.0);
MetricChart flat_torus_chart(int n = 4, double period = 1.0);
/// Constant metric on [-1, 1]^n with the standard J.
MetricChart constant_chart(const Mat& g, std::string name = "constant");
/// Unit round S^4 through stereographic coordinates, g = 4 delta / (1 + |x|^2)^2.
MetricChart s4_chart();
/// Fubini-Study on the affine chart C^2 of CP^2, identity at the origin,
/// holomorphic sectional curvature 4.
MetricChart fubini_study_chart();
/// S^2(a) x S^2(b) in spherical coordinates (theta1, phi1, theta2, phi2);
/// a, b are the squared radii.
MetricChart s2xs2_chart(double a = 1.0, double b = 1.0);
/// Upper half-space model delta / x_4^2.
MetricChart hyperbolic_chart();
/// delta + 0.1 x_1^2 e_2 (x) e_2.
MetricChart perturbed_chart();
/// Conformal bump exp(2 phi) delta with phi = 0.5 exp(-|x|^2).
MetricChart bump_chart();
/// Unit S^2 in spherical coordinates (theta, phi).
MetricChart s2_chart();

/// Catalog names of the four-dimensional charts.
std::vector<std::string> chart_names();
MetricChart chart_by_name(const std::string& name);

/// A convenient interior base point for each named chart.
Vec base_point(const MetricChart& chart);

} // namespace geolab::chart
