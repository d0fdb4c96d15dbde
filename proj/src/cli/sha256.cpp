#include <geolab/cli/sha256.hpp>
#include <geolab/common/error.hpp>

#include <openssl/evp.h>

#include <fmt/core.h>

#include <fstream>
#include <memory>
#include <sstream>

namespace geolab::cli {

std::string sha256_hex(const std::string& data)
{
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr) != 1) throw Error("SHA-256 failed");
    std::string hex;
    for (unsigned int i = 0; i < len; ++i) hex += fmt::format("{:02x}", digest[i]);
    return hex;
}

std::string sha256_file(const std::filesystem::path& path)
{
    std::ifstream f(path, std::ios::binary);
    if (!f) throw Error(fmt::format("cannot read '{}'", path.string()));
    std::stringstream ss;
    ss << f.rdbuf();
    return sha256_hex(ss.str());
}

} // namespace geolab::cli
