#include <geolab/common/csv.hpp>
#include <geolab/spectra/report_io.hpp>

namespace geolab::spectra {

std::string spectrum_csv(const std::vector<NamedReport>& reports)
{
    CsvWriter csv({"problem_id", "i", "eigenvalue"});
    for (const auto& [id, r] : reports)
        for (size_t i = 0; i < r.eigenvalues.size(); ++i)
            csv.row({id, std::to_string(i), format_double(r.eigenvalues[i])});
    return csv.str();
}

std::string index_csv(const std::vector<NamedReport>& reports)
{
    CsvWriter csv({"problem_id", "index", "tol_neg", "operator_size", "computed"});
    for (const auto& [id, r] : reports)
        csv.row({id, std::to_string(r.index), format_double(r.tol_neg), std::to_string(r.operator_size),
                 std::to_string(r.eigenvalues.size())});
    return csv.str();
}

} // namespace geolab::spectra
