#include <geolab/chart/topology.hpp>
#include <geolab/common/error.hpp>

#include <fmt/core.h>

#include <cstdlib>

namespace geolab::chart {

int euler_from_cells(const std::vector<int>& counts)
{
    int chi = 0;
    for (size_t k = 0; k < counts.size(); ++k) {
        if (counts[k] < 0) throw Rejected("cell counts must be nonnegative");
        chi += (k % 2 == 0) ? counts[k] : -counts[k];
    }
    return chi;
}

void validate(const TopologicalData& td)
{
    if (td.cell_counts && euler_from_cells(*td.cell_counts) != td.euler)
        throw Rejected(fmt::format("euler characteristic {} disagrees with cell counts ({})", td.euler,
                                   euler_from_cells(*td.cell_counts)));
}

bool hitchin_thorpe(const TopologicalData& td)
{
    validate(td);
    return 3 * std::abs(td.signature) <= 2 * td.euler;
}

} // namespace geolab::chart
