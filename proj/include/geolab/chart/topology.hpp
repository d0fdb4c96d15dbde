#pragma once

#include <optional>
#include <vector>

namespace geolab::chart {

struct TopologicalData {
    int signature = 0;
    int euler = 0;
    std::optional<std::vector<int>> cell_counts;
};

/// Alternating sum of cell counts. Throws Rejected on a negative count.
int euler_from_cells(const std::vector<int>& counts);

/// Checks euler against the cell counts when present; throws Rejected.
void validate(const TopologicalData& td);

/// Necessary condition |tau| <= (2/3) chi for an Einstein metric.
bool hitchin_thorpe(const TopologicalData& td);

} // namespace geolab::chart
