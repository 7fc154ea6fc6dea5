#include "e8/util.hpp"

#include <openssl/evp.h>

#include <cstdio>
#include <stdexcept>

namespace e8 {

std::string sha256_hex(const std::string& data) {
    unsigned char md[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (!EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr))
        throw std::runtime_error("sha256 failed");
    std::string out(2 * len, '0');
    for (unsigned int i = 0; i < len; i++)
        std::snprintf(out.data() + 2 * i, 3, "%02x", md[i]);
    return out;
}

}  // namespace e8
