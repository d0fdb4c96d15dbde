#pragma once

#include <filesystem>
#include <string>
#include <vector>

namespace geolab {

/// Round-trip formatting of a double (shortest representation that parses back exactly).
std::string format_double(double x);

/// Small CSV writer: UTF-8, comma delimiter, header row first.
class CsvWriter {
public:
    explicit CsvWriter(std::vector<std::string> header);

    CsvWriter& row(const std::vector<std::string>& cells);
    std::string str() const;
    void write(const std::filesystem::path& path) const;

    size_t rows() const { return rows_.size(); }

private:
    std::vector<std::string> header_;
    std::vector<std::vector<std::string>> rows_;
};

/// Parses a CSV produced by CsvWriter (no quoting support). First row is the header.
std::vector<std::vector<std::string>> read_csv(const std::filesystem::path& path);

} // namespace geolab
