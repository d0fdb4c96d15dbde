#include <geolab/common/csv.hpp>

#include <fmt/format.h>

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace geolab {

std::string format_double(double x)
{
    return fmt::format("{}", x);
}

CsvWriter::CsvWriter(std::vector<std::string> header) : header_(std::move(header)) {}

CsvWriter& CsvWriter::row(const std::vector<std::string>& cells)
{
    if (cells.size() != header_.size()) {
        throw std::invalid_argument(
            fmt::format("csv row has {} cells, header has {}", cells.size(), header_.size()));
    }
    rows_.push_back(cells);
    return *this;
}

std::string CsvWriter::str() const
{
    std::string out;
    auto emit = [&out](const std::vector<std::string>& cells) {
        for (size_t i = 0; i < cells.size(); ++i) {
            if (i) out += ',';
            out += cells[i];
        }
        out += '\n';
    };
    emit(header_);
    for (const auto& r : rows_) emit(r);
    return out;
}

void CsvWriter::write(const std::filesystem::path& path) const
{
    std::ofstream os(path, std::ios::binary);
    if (!os) throw std::runtime_error("cannot open " + path.string());
    os << str();
}

std::vector<std::vector<std::string>> read_csv(const std::filesystem::path& path)
{
    std::ifstream is(path, std::ios::binary);
    if (!is) throw std::runtime_error("cannot open " + path.string());
    std::vector<std::vector<std::string>> out;
    std::string line;
    while (std::getline(is, line)) {
        std::vector<std::string> cells;
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ',')) cells.push_back(cell);
        out.push_back(std::move(cells));
    }
    return out;
}

} // namespace geolab
