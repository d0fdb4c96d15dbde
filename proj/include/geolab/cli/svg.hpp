#pragma once

#include <string>
#include <vector>

namespace geolab::cli {

struct Series {
    std::string name;
    std::vector<double> x, y;
};

/// Plain line chart with axes, extreme tick labels and a legend.
std::string line_plot(const std::string& title, const std::string& xlabel, const std::string& ylabel,
                      const std::vector<Series>& series);

} // namespace geolab::cli
