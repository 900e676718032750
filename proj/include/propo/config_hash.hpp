#pragma once

#include <array>
#include <cstdio>
#include <string>

#include <nlohmann/json.hpp>
#include <openssl/evp.h>

namespace propo {

inline std::string sha256_hex(const std::string& data) {
    std::array<unsigned char, EVP_MAX_MD_SIZE> digest{};
    unsigned int len = 0;
    EVP_Digest(data.data(), data.size(), digest.data(), &len, EVP_sha256(), nullptr);
    std::string hex;
    hex.reserve(2 * len);
    char buf[3];
    for (unsigned i = 0; i < len; ++i) {
        std::snprintf(buf, sizeof buf, "%02x", digest[i]);
        hex += buf;
    }
    return hex;
}

// Digest of the canonical (key-sorted, compact) JSON form of a configuration.
inline std::string config_hash(const nlohmann::json& config) {
    return sha256_hex(config.dump()).substr(0, 16);
}

}
