#pragma once

#include <geolab/spectra/eigen_solver.hpp>

#include <string>
#include <utility>
#include <vector>

namespace geolab::spectra {

using NamedReport = std::pair<std::string, SpectralReport>;

/// Columns problem_id, i, eigenvalue.
std::string spectrum_csv(const std::vector<NamedReport>& reports);
/// Columns problem_id, index, tol_neg, operator_size, computed.
std::string index_csv(const std::vector<NamedReport>& reports);

} // namespace geolab::spectra
