#pragma once

#include <filesystem>
#include <string>

namespace geolab::cli {

std::string sha256_hex(const std::string& data);
std::string sha256_file(const std::filesystem::path& path);

} // namespace geolab::cli
